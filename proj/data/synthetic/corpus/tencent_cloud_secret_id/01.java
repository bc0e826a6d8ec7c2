// handler 0
private static final String access = "AKIDPgMGZU5b933IeF9xbJuYeZ5XmA7N7QNe";
private static final String value_2 = "15966";
private static final String value_3 = "3943";
private static final String value_4 = "95916";
// logging 5
private static final String value_6 = "72766";
// pagination 7
// retry budget 8
// cache window 9
private static final String value_10 = "62730";
// retry budget 11
// logging 12
private static final String value_13 = "632";
private static final String value_14 = "6817";
private static final String value_15 = "23315";
private static final String value_16 = "30458";
// retry budget 17
private static final String value_18 = "18948";
