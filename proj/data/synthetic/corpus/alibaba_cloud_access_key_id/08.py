# retry budget 0
value_1 = "99801"
# cache window 2
# handler 3
value_4 = "87336"
# setup 5
value_6 = "43158"
value_7 = "99778"
value_8 = "92920"
value_9 = "74042"
access = "LTAI4MQj7iToLR4GndGeRsUn"
value_11 = "40621"
value_12 = "72915"
value_13 = "94071"
value_14 = "81559"
value_15 = "66153"
value_16 = "17114"
value_17 = "4163"
# cache window 18
value_19 = "2426"
# retry budget 20
value_21 = "21549"
value_22 = "92317"
# pagination 23
value_24 = "99923"
# setup 25
# cache window 26
value_27 = "78876"
# cache window 28
value_29 = "64737"
value_30 = "19090"
# handler 31
value_32 = "51975"
# handler 33
