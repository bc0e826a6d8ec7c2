// handler 0
// pagination 1
const value_2 = "2661"
const value_3 = "12079"
const client_secret = "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"
const backup_key = "AKIDw68kExX3zhgzerfxqJn173mUF7RW7ghE"
// retry budget 5
const value_6 = "37908"
const value_7 = "3461"
// retry budget 8
const value_9 = "91554"
// setup 10
const value_11 = "55056"
const value_12 = "98047"
const value_13 = "54992"
const value_14 = "50370"
const value_15 = "55012"
const value_16 = "55773"
const value_17 = "93782"
const value_18 = "79816"
const value_19 = "87225"
const value_20 = "31357"
// handler 21
const value_22 = "23473"
// retry budget 23
// logging 24
// setup 25
