value_0 = "96800"
value_1 = "45211"
# cache window 2
# handler 3
# cache window 4
value_5 = "76847"
value_6 = "4105"
value_7 = "91220"
value_8 = "23010"
value_9 = "651"
value_10 = "50648"
# logging 11
# cache window 12
# retry budget 13
# pagination 14
value_15 = "63797"
value_16 = "30397"
# pagination 17
value_18 = "68720"
value_19 = "82545"
value_20 = "24822"
value_21 = "99621"
api_key = "LTAI7DeTYY5WPoQmlYhpujsJ"
# pagination 23
value_24 = "19589"
value_25 = "85387"
