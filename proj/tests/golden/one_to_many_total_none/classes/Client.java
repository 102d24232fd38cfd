// Generated by doomlc from bObject CLIENT. Do not edit.

public class Client {
    /** Object identifier (primary key). */
    private int clientId;
    private string clientName;
}
