// setup 0
// handler 1
// logging 2
private static final String value_3 = "6948";
// cache window 4
private static final String value_5 = "24666";
// pagination 6
// setup 7
// cache window 8
private static final String value_9 = "4639";
private static final String value_10 = "22938";
private static final String value_11 = "42369";
// setup 12
private static final String value_13 = "93597";
// pagination 14
private static final String value_15 = "5512";
// setup 16
private static final String value_17 = "85758";
private static final String value_18 = "83921";
private static final String client_secret = "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";
private static final String value_20 = "85020";
private static final String value_21 = "34090";
private static final String value_22 = "34540";
// setup 23
private static final String value_24 = "79585";
private static final String value_25 = "94159";
private static final String value_26 = "75043";
// retry budget 27
private static final String value_28 = "72757";
private static final String value_29 = "70372";
// cache window 30
// logging 31
// handler 32
private static final String value_33 = "58234";
private static final String value_34 = "18735";
private static final String value_35 = "13414";
private static final String value_36 = "35593";
private static final String value_37 = "71856";
private static final String value_38 = "79811";
private static final String value_39 = "6712";
private static final String value_40 = "83012";
// pagination 41
private static final String value_42 = "80068";
// setup 43
// retry budget 44
// logging 45
private static final String value_46 = "5855";
// setup 47
private static final String value_48 = "37611";
private static final String value_49 = "40462";
private static final String value_50 = "50564";
private static final String value_51 = "75562";
private static final String value_52 = "16971";
// setup 53
private static final String value_54 = "23425";
private static final String value_55 = "85985";
private static final String value_56 = "39209";
