// Generated by doomlc from bObject PART. Do not edit.

public class Part {
    /** Object identifier (primary key). */
    private int partId;
}
