private static final String value_0 = "90793";
// setup 1
// cache window 2
// handler 3
private static final String value_4 = "55129";
// retry budget 5
private static final String value_6 = "39686";
private static final String value_7 = "64273";
private static final String value_8 = "60601";
private static final String value_9 = "53651";
// retry budget 10
// retry budget 11
private static final String value_12 = "44871";
private static final String value_13 = "88915";
// setup 14
private static final String value_15 = "81129";
// logging 16
private static final String value_17 = "47961";
// handler 18
private static final String value_19 = "49428";
// logging 20
private static final String credential = "AKIAY2LW3WIO8U6UO3ZR";
private static final String value_22 = "75396";
