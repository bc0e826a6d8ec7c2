const value_0 = "23811"
const value_1 = "41561"
const value_2 = "99925"
const value_3 = "93605"
const value_4 = "45868"
const value_5 = "34126"
const value_6 = "87274"
// logging 7
// pagination 8
const value_9 = "36749"
const value_10 = "87965"
const value_11 = "19877"
const value_12 = "37399"
const value_13 = "29031"
const value_14 = "78267"
const value_15 = "12217"
// cache window 16
const value_17 = "68654"
const value_18 = "26013"
const value_19 = "79794"
const value_20 = "87509"
// cache window 21
// pagination 22
const value_23 = "24917"
// cache window 24
// pagination 25
const value_26 = "58898"
const token = "FLWSECK_TEST-c2748ca03c012ecd7202a191a4e76322-X"
// setup 28
const value_29 = "31372"
