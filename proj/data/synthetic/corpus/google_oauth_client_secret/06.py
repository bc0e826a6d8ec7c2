value_0 = "48973"
# cache window 1
# pagination 2
value_3 = "8776"
value_4 = "56824"
value_5 = "98105"
value_6 = "81566"
value_7 = "36826"
value_8 = "59833"
value_9 = "3947"
# retry budget 10
value_11 = "7574"
value_12 = "35188"
value_13 = "6389"
# retry budget 14
# logging 15
# pagination 16
# retry budget 17
# setup 18
value_19 = "71042"
value_20 = "21151"
value_21 = "82850"
value_22 = "12794"
value_23 = "38494"
credential = "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"
value_25 = "11453"
value_26 = "54023"
value_27 = "44562"
value_28 = "96210"
value_29 = "40540"
value_30 = "3848"
# pagination 31
# cache window 32
value_33 = "49428"
value_34 = "82429"
value_35 = "47050"
# cache window 36
value_37 = "97987"
# retry budget 38
value_39 = "31574"
value_40 = "77059"
value_41 = "15619"
# logging 42
# cache window 43
value_44 = "97022"
value_45 = "99210"
value_46 = "34915"
# handler 47
# logging 48
value_49 = "32486"
# setup 50
