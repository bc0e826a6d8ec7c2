const value_0 = "90810"
// logging 1
const value_2 = "57169"
const value_3 = "95124"
const value_4 = "49936"
const value_5 = "84355"
const value_6 = "60100"
const value_7 = "6562"
const value_8 = "77583"
const value_9 = "93363"
const value_10 = "24853"
// handler 11
const api_key = "SB-Mid-server-FGex0GSkL8ipIPry2dErYh6b"
const value_13 = "21829"
const value_14 = "23181"
const value_15 = "75284"
// retry budget 16
const value_17 = "86363"
const value_18 = "41589"
// logging 19
const value_20 = "68618"
const value_21 = "10075"
const value_22 = "73036"
const value_23 = "84710"
const value_24 = "42604"
const value_25 = "31806"
const value_26 = "48453"
// handler 27
const value_28 = "54058"
// setup 29
const value_30 = "45928"
const value_31 = "32675"
// setup 32
const value_33 = "44011"
const value_34 = "48639"
const value_35 = "76843"
// logging 36
const value_37 = "96881"
