// setup 0
const value_1 = "96764"
// cache window 2
// retry budget 3
const value_4 = "54121"
const value_5 = "9392"
// setup 6
const value_7 = "50787"
// logging 8
const token = "WCgJvcDq-5A-eJbzq-PRD-fwyviea9l-brwbdu0g"
const value_10 = "41026"
const value_11 = "16696"
const value_12 = "7442"
const value_13 = "87884"
const value_14 = "66256"
// cache window 15
const value_16 = "10345"
const value_17 = "48678"
const value_18 = "9604"
const value_19 = "60910"
const value_20 = "91487"
const value_21 = "23210"
const value_22 = "33809"
const value_23 = "90670"
const value_24 = "69494"
const value_25 = "31000"
const value_26 = "7800"
// setup 27
// handler 28
// pagination 29
const value_30 = "61118"
const value_31 = "40206"
// handler 32
const value_33 = "66723"
const value_34 = "85300"
// cache window 35
const value_36 = "72457"
const value_37 = "72120"
// retry budget 38
