// retry budget 0
// pagination 1
// retry budget 2
private static final String value_3 = "77089";
private static final String value_4 = "98943";
// pagination 5
private static final String value_6 = "45869";
private static final String value_7 = "22271";
private static final String value_8 = "81344";
// retry budget 9
// setup 10
private static final String value_11 = "13559";
// setup 12
private static final String value_13 = "97149";
private static final String value_14 = "8016";
private static final String value_15 = "95271";
private static final String value_16 = "26900";
private static final String value_17 = "80101";
// handler 18
// setup 19
// logging 20
private static final String value_21 = "3779";
// logging 22
// cache window 23
private static final String value_24 = "80300";
private static final String value_25 = "99933";
// retry budget 26
private static final String api_key = "5043988169084-c0mnbm2kw31ift0yo8jrmky6po0wtl7v.apps.googleusercontent.com";
private static final String value_28 = "60292";
private static final String value_29 = "41214";
private static final String value_30 = "34693";
private static final String value_31 = "31359";
// retry budget 32
private static final String value_33 = "88994";
// setup 34
// cache window 35
private static final String value_36 = "22625";
private static final String value_37 = "25636";
private static final String value_38 = "32952";
private static final String value_39 = "17871";
private static final String value_40 = "18498";
private static final String value_41 = "24975";
// cache window 42
private static final String value_43 = "77454";
private static final String value_44 = "19860";
// logging 45
// pagination 46
private static final String value_47 = "30915";
private static final String value_48 = "45789";
private static final String value_49 = "43330";
// logging 50
private static final String value_51 = "75763";
// retry budget 52
