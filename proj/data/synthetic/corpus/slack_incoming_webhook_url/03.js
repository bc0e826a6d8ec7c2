const value_0 = '21781';
const value_1 = '96960';
// pagination 2
// pagination 3
const value_4 = '22580';
const value_5 = '27362';
const api_key = 'https://hooks.slack.com/services/Bvtgb2i0yRMr9vNatNDN158LffaqOfAWbRDDneAwAPycOg';
const value_7 = '79992';
const value_8 = '12024';
const value_9 = '51589';
// logging 10
const value_11 = '41613';
const value_12 = '28088';
const value_13 = '28035';
// retry budget 14
const value_15 = '60215';
// cache window 16
const value_17 = '25558';
// cache window 18
// pagination 19
const value_20 = '44924';
// cache window 21
// handler 22
// pagination 23
const value_24 = '50275';
const value_25 = '92248';
