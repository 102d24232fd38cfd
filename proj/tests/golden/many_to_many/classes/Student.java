// Generated by doomlc from bObject STUDENT. Do not edit.

public class Student {
    /** Object identifier (primary key). */
    private int studentId;
    private string studentName;
}
