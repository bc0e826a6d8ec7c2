// logging 0
const value_1 = "1257"
// handler 2
const value_3 = "98351"
const value_4 = "68857"
// pagination 5
const value_6 = "77120"
const value_7 = "42103"
const value_8 = "40358"
const value_9 = "33737"
// handler 10
const value_11 = "39998"
// retry budget 12
const value_13 = "26825"
const value_14 = "22156"
const value_15 = "3369"
const value_16 = "24592"
const value_17 = "10260"
const value_18 = "65697"
const value_19 = "41726"
const value_20 = "95017"
const value_21 = "99164"
const value_22 = "66382"
const value_23 = "9820"
const token = "LTAI7DeTYY5WPoQmlYhpujsJ"
// retry budget 25
const value_26 = "76803"
const value_27 = "16789"
const value_28 = "30243"
const value_29 = "86673"
const value_30 = "15570"
const value_31 = "32135"
const value_32 = "92708"
// logging 33
const value_34 = "2539"
// handler 35
