// Generated by doomlc from bObject COURSE. Do not edit.

public class Course {
    /** Object identifier (primary key). */
    private int courseId;
    private string courseTitle;
}
