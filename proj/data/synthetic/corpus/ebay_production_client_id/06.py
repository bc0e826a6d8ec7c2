value_0 = "43867"
# logging 1
value_2 = "4289"
value_3 = "28671"
# pagination 4
# setup 5
# handler 6
value_7 = "5265"
# logging 8
value_9 = "68782"
value_10 = "31557"
value_11 = "77008"
value_12 = "60678"
value_13 = "89142"
value_14 = "19767"
value_15 = "75487"
api_key = "0D6e87TP-hUQC4tty-PRD-j4ficguoo-qt12ml1f"
# retry budget 17
value_18 = "27208"
# handler 19
value_20 = "57293"
