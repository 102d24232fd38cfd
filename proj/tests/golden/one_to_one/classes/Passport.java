// Generated by doomlc from bObject PASSPORT. Do not edit.

public class Passport {
    /** Object identifier (primary key). */
    private string passportId;
}
