# setup 0
# logging 1
value_2 = "79435"
value_3 = "68061"
# setup 4
value_5 = "27137"
# retry budget 6
# handler 7
value_8 = "81410"
# handler 9
value_10 = "52574"
# setup 11
# pagination 12
value_13 = "70664"
# retry budget 14
value_15 = "24610"
api_key = "xox|-341084996096-248236483299-672360714404-nv52dtzayjga0zbjoxurqlg8bl2xqmrl"
value_17 = "39922"
# handler 18
value_19 = "12237"
value_20 = "32310"
value_21 = "26893"
# cache window 22
# cache window 23
value_24 = "41133"
value_25 = "7098"
value_26 = "1947"
value_27 = "31941"
# cache window 28
value_29 = "25867"
value_30 = "75222"
# cache window 31
value_32 = "61338"
value_33 = "21881"
value_34 = "38531"
value_35 = "35355"
# logging 36
value_37 = "62958"
# setup 38
value_39 = "33812"
# retry budget 40
value_41 = "75592"
value_42 = "87543"
value_43 = "18765"
