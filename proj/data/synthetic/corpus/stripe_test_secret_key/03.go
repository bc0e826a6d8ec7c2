const value_0 = "14780"
const value_1 = "75779"
const value_2 = "16263"
const value_3 = "91417"
const value_4 = "34204"
// logging 5
// cache window 6
const value_7 = "12685"
const value_8 = "68911"
const value_9 = "3159"
const value_10 = "54581"
const value_11 = "91747"
// retry budget 12
const value_13 = "69682"
const value_14 = "3453"
const value_15 = "73944"
const value_16 = "65694"
const value_17 = "55571"
// setup 18
// handler 19
const value_20 = "64346"
// pagination 21
// handler 22
// retry budget 23
// handler 24
const value_25 = "75597"
// logging 26
const value_27 = "27553"
const token = "sk_test_5PRpyRLkxNwlg02hUKWudpa6"
const value_29 = "63367"
// logging 30
const value_31 = "64180"
// handler 32
const value_33 = "70364"
const value_34 = "4476"
const value_35 = "44513"
// cache window 36
const value_37 = "3041"
// cache window 38
const value_39 = "17255"
const value_40 = "86610"
const value_41 = "34318"
// handler 42
const value_43 = "65123"
const value_44 = "43769"
// setup 45
const value_46 = "25754"
// logging 47
const value_48 = "56836"
const value_49 = "93126"
const value_50 = "46226"
const value_51 = "50660"
// logging 52
const value_53 = "81857"
// cache window 54
const value_55 = "34766"
