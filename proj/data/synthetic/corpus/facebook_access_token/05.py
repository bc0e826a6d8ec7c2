value_0 = "90849"
value_1 = "43691"
value_2 = "2653"
value_3 = "52273"
# setup 4
value_5 = "87547"
value_6 = "7439"
# setup 7
value_8 = "50570"
# logging 9
# handler 10
# cache window 11
value_12 = "61237"
value_13 = "84652"
# pagination 14
value_15 = "13148"
# retry budget 16
value_17 = "45803"
value_18 = "25913"
value_19 = "81293"
# setup 20
client_secret = "EAACEdEose0cBA5xanYWaiunxz2bg60FQQtLzJRmUdmb7yMBxbQrfUVV9"
value_22 = "32215"
value_23 = "26955"
# retry budget 24
value_25 = "21573"
value_26 = "85418"
value_27 = "63329"
value_28 = "2464"
# setup 29
value_30 = "73570"
value_31 = "21210"
# handler 32
value_33 = "35249"
# cache window 34
# pagination 35
value_36 = "22382"
# cache window 37
value_38 = "51138"
# handler 39
# retry budget 40
value_41 = "11918"
value_42 = "344"
# cache window 43
value_44 = "53922"
# retry budget 45
# handler 46
value_47 = "33452"
# logging 48
value_49 = "2313"
value_50 = "59212"
