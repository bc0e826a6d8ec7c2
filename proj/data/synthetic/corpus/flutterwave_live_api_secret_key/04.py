value_0 = "11952"
value_1 = "19152"
value_2 = "63292"
value_3 = "54563"
value_4 = "77376"
access = "FLWPUBK_TEST-506cf9d10a68baa4b8e47658df80fe26-X"
value_6 = "35393"
value_7 = "2686"
value_8 = "29495"
value_9 = "84193"
