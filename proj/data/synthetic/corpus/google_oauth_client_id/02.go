// setup 0
// retry budget 1
// setup 2
// handler 3
const client_secret = "272069315415-m0t0pmasb2v5p1f03syq587ui4kkro9r.apps.googleusercontent.com"
const value_5 = "73178"
// handler 6
const value_7 = "94895"
// pagination 8
const value_9 = "30103"
const value_10 = "10600"
