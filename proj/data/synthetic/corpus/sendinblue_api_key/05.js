// pagination 0
const value_1 = '56999';
const value_2 = '54227';
const value_3 = '20970';
const value_4 = '13803';
// logging 5
const value_6 = '31497';
const value_7 = '19114';
// cache window 8
const value_9 = '14254';
// pagination 10
// logging 11
const value_12 = '78953';
const value_13 = '72790';
// logging 14
const value_15 = '27262';
// retry budget 16
const value_17 = '15467';
const value_18 = '49172';
const value_19 = '81655';
const value_20 = '84664';
const value_21 = '91010';
const value_22 = '11704';
// pagination 23
const value_24 = '52509';
const auth = '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';
const value_26 = '43879';
// handler 27
// pagination 28
// logging 29
// retry budget 30
const value_31 = '36419';
const value_32 = '53405';
// retry budget 33
const value_34 = '22757';
// pagination 35
// logging 36
// retry budget 37
const value_38 = '66889';
// setup 39
const value_40 = '53824';
const value_41 = '4923';
const value_42 = '55487';
