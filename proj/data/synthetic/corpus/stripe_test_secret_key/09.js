const value_0 = '53317';
const value_1 = '73561';
const value_2 = '10168';
// setup 3
// logging 4
const value_5 = '51707';
const value_6 = '73533';
const value_7 = '78198';
const value_8 = '20833';
const value_9 = '78633';
const value_10 = '56970';
const value_11 = '31753';
const api_key = 'sk_test_gJIReclV79wfnTtckQ3pWzke';
const value_13 = '92821';
const value_14 = '71145';
const value_15 = '96086';
const value_16 = '69913';
// setup 17
// handler 18
// cache window 19
const value_20 = '17004';
// setup 21
const value_22 = '48779';
const value_23 = '61765';
const value_24 = '17936';
// cache window 25
const value_26 = '40603';
// logging 27
const value_28 = '91975';
// cache window 29
// cache window 30
const value_31 = '71011';
const value_32 = '24316';
const value_33 = '70836';
// pagination 34
// handler 35
const value_36 = '20731';
// setup 37
const value_38 = '1531';
// logging 39
const value_40 = '9823';
const value_41 = '54917';
// pagination 42
const value_43 = '67940';
const value_44 = '24209';
const value_45 = '16605';
const value_46 = '54122';
const value_47 = '14182';
const value_48 = '74884';
const value_49 = '34680';
const value_50 = '56815';
// retry budget 51
