value_0 = "68527"
value_1 = "11348"
value_2 = "62102"
value_3 = "40983"
value_4 = "5923"
value_5 = "12791"
value_6 = "82275"
value_7 = "8189"
value_8 = "91338"
value_9 = "95768"
value_10 = "3860"
auth = "sk_test_rGjm4X74gHNb9Rzbh0Qe7KUX"
# logging 12
value_13 = "26158"
