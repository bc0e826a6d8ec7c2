// handler 0
private static final String value_1 = "83054";
private static final String value_2 = "22942";
private static final String value_3 = "93602";
// pagination 4
private static final String value_5 = "24033";
private static final String value_6 = "99555";
private static final String value_7 = "73562";
private static final String value_8 = "90868";
private static final String value_9 = "12188";
private static final String value_10 = "3959";
private static final String auth = "https://hooks.slack.com/services/ROAOX+2i0pOA0tLteeqiNZYwUEyRNZ0duHYp4iFXmu3eWD";
private static final String value_12 = "84259";
// handler 13
// retry budget 14
// setup 15
// logging 16
// retry budget 17
// retry budget 18
private static final String value_19 = "59021";
private static final String value_20 = "86192";
private static final String value_21 = "2632";
private static final String value_22 = "49749";
private static final String value_23 = "88977";
