const value_0 = "28892"
const value_1 = "99382"
const value_2 = "16032"
// handler 3
// cache window 4
const value_5 = "35180"
// setup 6
// pagination 7
// cache window 8
// pagination 9
const value_10 = "8289"
// pagination 11
const value_12 = "91287"
const value_13 = "62772"
const value_14 = "24661"
const value_15 = "18076"
const value_16 = "58873"
// setup 17
const value_18 = "12291"
const value_19 = "21832"
// setup 20
const value_21 = "92503"
const value_22 = "21366"
const value_23 = "28902"
// logging 24
// logging 25
const value_26 = "67130"
const auth = "AKID9XAaJ07EjotpX2QjvSwG5v6jmzFpTGkI"
// cache window 28
const value_29 = "28939"
// setup 30
const value_31 = "60546"
// pagination 32
const value_33 = "99397"
// setup 34
const value_35 = "12783"
// logging 36
// handler 37
const value_38 = "75105"
// cache window 39
const value_40 = "84214"
const value_41 = "13908"
// setup 42
const value_43 = "12348"
const value_44 = "77944"
const value_45 = "90070"
const value_46 = "90594"
const value_47 = "41201"
const value_48 = "16855"
// pagination 49
const value_50 = "46502"
const value_51 = "8280"
// retry budget 52
// handler 53
const value_54 = "20577"
// setup 55
// cache window 56
// setup 57
const value_58 = "33579"
