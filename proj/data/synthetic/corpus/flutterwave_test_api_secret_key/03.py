# setup 0
client_secret = "FLWSECK_TEST-17692eef2d5b4299ca4c84adb81e5a78-X"
value_2 = "37889"
value_3 = "92398"
value_4 = "24048"
# cache window 5
value_6 = "93369"
value_7 = "46472"
# pagination 8
value_9 = "55522"
# logging 10
value_11 = "73393"
value_12 = "89420"
# pagination 13
value_14 = "17749"
value_15 = "58733"
# setup 16
value_17 = "72314"
# pagination 18
# retry budget 19
value_20 = "41895"
value_21 = "87082"
value_22 = "26293"
value_23 = "86136"
value_24 = "54356"
value_25 = "52289"
value_26 = "75502"
value_27 = "47931"
# pagination 28
value_29 = "86202"
