// logging 0
const value_1 = '72953';
const value_2 = '61564';
const value_3 = '55659';
const value_4 = '69971';
const value_5 = '65305';
const value_6 = '8049';
const value_7 = '87910';
const value_8 = '35168';
// cache window 9
const value_10 = '94768';
// pagination 11
const value_12 = '49986';
// handler 13
// pagination 14
const value_15 = '56817';
// setup 16
const value_17 = '13678';
const value_18 = '66131';
const value_19 = '87839';
// handler 20
const value_21 = '78870';
const value_22 = '96902';
const value_23 = '47679';
const client_secret = 'sk_test_5PRpyRLkxNwlg02hUKWudpa6';
const value_25 = '8433';
// setup 26
const value_27 = '18928';
const value_28 = '86603';
const value_29 = '45578';
const value_30 = '9471';
const value_31 = '89484';
const value_32 = '84941';
// logging 33
// cache window 34
// cache window 35
const value_36 = '35399';
const value_37 = '8406';
// pagination 38
const value_39 = '90130';
// setup 40
const value_41 = '63308';
const value_42 = '15843';
const value_43 = '27416';
const value_44 = '91908';
const value_45 = '18549';
const value_46 = '13189';
const value_47 = '73483';
const value_48 = '69050';
const value_49 = '68263';
const value_50 = '92428';
const value_51 = '57958';
const value_52 = '50404';
// setup 53
const value_54 = '11770';
const value_55 = '98974';
// logging 56
// pagination 57
const value_58 = '94202';
// pagination 59
const value_60 = '98739';
const value_61 = '53648';
