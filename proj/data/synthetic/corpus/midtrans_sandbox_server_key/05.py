value_0 = "17647"
value_1 = "86951"
# logging 2
value_3 = "48937"
value_4 = "56267"
value_5 = "66150"
# pagination 6
value_7 = "25618"
value_8 = "44533"
# retry budget 9
value_10 = "1250"
value_11 = "42015"
value_12 = "32910"
value_13 = "64330"
value_14 = "43377"
value_15 = "49273"
# handler 16
# retry budget 17
value_18 = "45343"
value_19 = "75482"
value_20 = "58543"
# setup 21
# logging 22
value_23 = "80429"
value_24 = "4606"
value_25 = "31990"
value_26 = "45825"
client_secret = "SB-Mid-server-gc1tMBpxYsQeHdfsoYU7FgOj"
# setup 28
value_29 = "18648"
value_30 = "95364"
value_31 = "88528"
value_32 = "6615"
# cache window 33
value_34 = "77240"
value_35 = "65546"
# handler 36
value_37 = "75722"
value_38 = "22214"
