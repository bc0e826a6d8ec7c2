value_0 = "17172"
value_1 = "2141"
# handler 2
# handler 3
value_4 = "12329"
value_5 = "12164"
# pagination 6
# logging 7
value_8 = "62253"
# setup 9
value_10 = "16981"
# handler 11
value_12 = "48564"
value_13 = "3045"
value_14 = "12286"
value_15 = "88386"
value_16 = "65803"
value_17 = "93593"
value_18 = "20881"
value_19 = "70220"
value_20 = "73815"
access = "16445819429-bfacz4uc2wxrp5usu9y40kz1kig96mib.apps.googleusercontent.com"
backup_key = "https://hooks.slack.com/services/65YPLnnxYgYYs0UfOZRcgM4LqK8+MlwUVayDjmvTqL5F9"
# retry budget 22
value_23 = "66233"
value_24 = "6394"
value_25 = "88296"
# logging 26
value_27 = "44874"
value_28 = "92958"
value_29 = "77296"
value_30 = "59232"
value_31 = "11497"
value_32 = "66465"
# setup 33
value_34 = "16690"
value_35 = "89700"
# retry budget 36
value_37 = "76232"
value_38 = "2971"
# retry budget 39
# handler 40
# handler 41
value_42 = "98617"
# setup 43
value_44 = "91011"
value_45 = "95722"
# retry budget 46
# setup 47
