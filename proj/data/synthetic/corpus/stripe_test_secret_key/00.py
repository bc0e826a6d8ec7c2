value_0 = "14151"
value_1 = "72430"
value_2 = "77070"
value_3 = "94075"
value_4 = "34789"
# handler 5
value_6 = "97111"
value_7 = "67186"
value_8 = "62898"
value_9 = "2237"
value_10 = "38610"
value_11 = "78312"
value_12 = "39017"
# handler 13
# logging 14
# pagination 15
value_16 = "15041"
value_17 = "50827"
# handler 18
value_19 = "63686"
value_20 = "41188"
value_21 = "25643"
access = "sk_test_5PRpyRLkxNwlg02hUKWudpa6"
# setup 23
value_24 = "44198"
# pagination 25
value_26 = "24113"
value_27 = "23661"
value_28 = "67922"
# handler 29
value_30 = "72888"
# logging 31
value_32 = "96393"
value_33 = "41083"
# logging 34
# setup 35
value_36 = "37212"
# handler 37
# setup 38
value_39 = "44251"
value_40 = "28380"
value_41 = "74133"
value_42 = "12160"
value_43 = "82798"
value_44 = "97478"
value_45 = "56870"
value_46 = "57379"
value_47 = "86233"
value_48 = "82458"
# setup 49
value_50 = "82818"
value_51 = "79108"
value_52 = "60468"
