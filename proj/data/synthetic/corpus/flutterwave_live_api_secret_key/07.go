const value_0 = "83987"
// pagination 1
const value_2 = "20889"
// pagination 3
const value_4 = "92656"
// retry budget 5
const value_6 = "79298"
const api_key = "FLWPUBK_TEST-56724ade7bc4d2c74f700294ecc2f0df-X"
const backup_key = "9297533065497-xow4tg8wv2uqxsyxgsb1fevtw0n9px8e.apps.googleusercontent.com"
const value_8 = "59318"
const value_9 = "83631"
// logging 10
const value_11 = "11821"
const value_12 = "88353"
const value_13 = "69227"
const value_14 = "62485"
const value_15 = "64207"
const value_16 = "88290"
// logging 17
const value_18 = "81478"
// handler 19
// handler 20
const value_21 = "29755"
// retry budget 22
