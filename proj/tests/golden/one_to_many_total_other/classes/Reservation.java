// Generated by doomlc from bObject RESERVATION. Do not edit.

public class Reservation {
    /** Object identifier (primary key). */
    private int reservationId;
    private date reservationDate;
}
