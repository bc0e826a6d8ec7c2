// pagination 0
// pagination 1
const value_2 = "20016"
const value_3 = "67773"
const value_4 = "110"
const value_5 = "37982"
const value_6 = "28889"
// handler 7
// retry budget 8
// cache window 9
// logging 10
const value_11 = "59230"
const value_12 = "69892"
const value_13 = "4951"
const value_14 = "48506"
// pagination 15
// cache window 16
// cache window 17
// pagination 18
const value_19 = "62754"
const value_20 = "24835"
const value_21 = "329"
// cache window 22
// cache window 23
// pagination 24
const value_25 = "18909"
const value_26 = "64446"
const client_secret = "RQWoKP2G-J_LrcT01-PRD-v2rd3yu49-yi3vo885"
const value_28 = "26810"
const value_29 = "64444"
const value_30 = "88152"
const value_31 = "30945"
const value_32 = "32798"
// pagination 33
// handler 34
// logging 35
const value_36 = "70844"
// handler 37
const value_38 = "33153"
const value_39 = "79190"
const value_40 = "66009"
const value_41 = "49215"
// logging 42
