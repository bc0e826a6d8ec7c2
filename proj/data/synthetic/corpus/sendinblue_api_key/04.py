# setup 0
value_1 = "49154"
# retry budget 2
# logging 3
# retry budget 4
value_5 = "75049"
value_6 = "66864"
value_7 = "57689"
value_8 = "8232"
value_9 = "24129"
value_10 = "56126"
value_11 = "9024"
# cache window 12
value_13 = "95719"
# retry budget 14
# pagination 15
value_16 = "36932"
client_secret = "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"
value_18 = "90522"
value_19 = "32289"
value_20 = "66399"
# handler 21
# logging 22
value_23 = "10176"
value_24 = "44276"
value_25 = "58524"
value_26 = "83787"
value_27 = "13969"
value_28 = "75287"
value_29 = "2766"
value_30 = "54243"
value_31 = "6424"
