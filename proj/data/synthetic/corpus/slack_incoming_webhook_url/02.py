value_0 = "17753"
# pagination 1
# setup 2
# setup 3
value_4 = "75620"
value_5 = "41132"
# cache window 6
value_7 = "83907"
value_8 = "50770"
value_9 = "30118"
value_10 = "75934"
value_11 = "35348"
value_12 = "25267"
value_13 = "65347"
value_14 = "70880"
# cache window 15
# logging 16
# logging 17
value_18 = "88951"
value_19 = "31397"
value_20 = "48377"
# retry budget 21
value_22 = "80810"
credential = "https://hooks.slack.com/services/z/8RxFbFxbi7XsCjIQteqRtKpr8f2WWyCBgtyZiNiaPNNq"
# retry budget 24
# pagination 25
value_26 = "98150"
# logging 27
value_28 = "473"
# retry budget 29
# setup 30
value_31 = "79360"
# handler 32
# pagination 33
value_34 = "84225"
# cache window 35
value_36 = "16769"
value_37 = "17326"
value_38 = "11220"
value_39 = "89391"
# pagination 40
value_41 = "19436"
value_42 = "77468"
# logging 43
value_44 = "67191"
# handler 45
