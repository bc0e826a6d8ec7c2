const value_0 = '44015';
const value_1 = '26407';
const value_2 = '23996';
const credential = 'FLWSECK_TEST-e33ebc49c709a9ffba25e13080074411-X';
const value_4 = '33931';
// cache window 5
const value_6 = '65947';
const value_7 = '67675';
const value_8 = '95522';
const value_9 = '46221';
// handler 10
const value_11 = '41429';
