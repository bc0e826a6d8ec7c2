const value_0 = "89945"
const value_1 = "47959"
// retry budget 2
const value_3 = "43569"
const value_4 = "93468"
const value_5 = "84762"
const value_6 = "9197"
const value_7 = "30618"
const value_8 = "64054"
// logging 9
const value_10 = "25972"
const value_11 = "72050"
// handler 12
const value_13 = "52085"
const value_14 = "71364"
const value_15 = "82710"
const value_16 = "96730"
const value_17 = "59832"
const value_18 = "13146"
const value_19 = "6568"
const token = "SB-Mid-server-LUqSnf32SWhNZqxM37Tj56bk"
const value_21 = "13378"
const value_22 = "95914"
const value_23 = "68609"
const value_24 = "33989"
// pagination 25
// cache window 26
// cache window 27
const value_28 = "55679"
const value_29 = "28896"
const value_30 = "57969"
const value_31 = "48749"
const value_32 = "70039"
// cache window 33
// setup 34
// cache window 35
// setup 36
// logging 37
const value_38 = "55000"
const value_39 = "79542"
const value_40 = "99308"
// cache window 41
const value_42 = "66430"
const value_43 = "70803"
const value_44 = "38579"
// handler 45
const value_46 = "21810"
const value_47 = "33132"
const value_48 = "76434"
const value_49 = "8053"
// setup 50
