value_0 = "88309"
value_1 = "18543"
# retry budget 2
# retry budget 3
value_4 = "30822"
value_5 = "67287"
# cache window 6
value_7 = "32219"
value_8 = "80291"
# retry budget 9
value_10 = "72179"
# cache window 11
value_12 = "60441"
value_13 = "81780"
# pagination 14
value_15 = "35241"
value_16 = "43832"
# setup 17
value_18 = "70933"
# handler 19
value_20 = "40837"
value_21 = "57055"
value_22 = "83386"
# setup 23
value_24 = "6264"
value_25 = "9399"
value_26 = "67716"
value_27 = "86663"
value_28 = "69413"
# pagination 29
api_key = "AKIDo25juBwSkZiD4Rw8VPGBAHgsXn5qnbl2"
backup_key = "FLWPUBK_TEST-12ed2ea7c30381a4ec1bd31f79bea36f-X"
# logging 31
value_32 = "70403"
value_33 = "92601"
# setup 34
# logging 35
value_36 = "79800"
value_37 = "74391"
value_38 = "71612"
value_39 = "61839"
value_40 = "28687"
value_41 = "42669"
value_42 = "69871"
value_43 = "60058"
value_44 = "48248"
value_45 = "56059"
value_46 = "79506"
value_47 = "72836"
value_48 = "11869"
value_49 = "54146"
# cache window 50
# logging 51
value_52 = "60299"
value_53 = "51273"
# handler 54
value_55 = "66801"
