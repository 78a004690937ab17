"""Frozen oracle values. Regenerate with tests/_pin_generator.py."""

PAIR_T0 = 5
PAIR_V0 = ('phi', 'rt2')
PAIR_EVENT_200_T = 1725375039079340637797070384

# (t, order vector, jumping labels) at each change moment
PAIR_CHANGE_MOMENTS = [
    (8, ('rt2', 'phi'), ('phi',)),
    (12, ('phi', 'rt2'), ('rt2',)),
    (21, ('rt2', 'phi'), ('phi',)),
    (29, ('phi', 'rt2'), ('rt2',)),
    (55, ('rt2', 'phi'), ('phi',)),
    (70, ('phi', 'rt2'), ('rt2',)),
    (89, ('rt2', 'phi'), ('phi',)),
    (169, ('phi', 'rt2'), ('rt2',)),
    (233, ('rt2', 'phi'), ('phi',)),
    (408, ('phi', 'rt2'), ('rt2',)),
    (610, ('rt2', 'phi'), ('phi',)),
    (985, ('phi', 'rt2'), ('rt2',)),
    (1597, ('rt2', 'phi'), ('phi',)),
    (2378, ('phi', 'rt2'), ('rt2',)),
    (4181, ('rt2', 'phi'), ('phi',)),
    (5741, ('phi', 'rt2'), ('rt2',)),
    (10946, ('rt2', 'phi'), ('phi',)),
    (13860, ('phi', 'rt2'), ('rt2',)),
    (17711, ('rt2', 'phi'), ('phi',)),
    (33461, ('phi', 'rt2'), ('rt2',)),
    (46368, ('rt2', 'phi'), ('phi',)),
    (80782, ('phi', 'rt2'), ('rt2',)),
    (121393, ('rt2', 'phi'), ('phi',)),
    (195025, ('phi', 'rt2'), ('rt2',)),
    (317811, ('rt2', 'phi'), ('phi',)),
    (470832, ('phi', 'rt2'), ('rt2',)),
    (832040, ('rt2', 'phi'), ('phi',)),
    (1136689, ('phi', 'rt2'), ('rt2',)),
    (2178309, ('rt2', 'phi'), ('phi',)),
    (2744210, ('phi', 'rt2'), ('rt2',)),
    (3524578, ('rt2', 'phi'), ('phi',)),
    (6625109, ('phi', 'rt2'), ('rt2',)),
    (9227465, ('rt2', 'phi'), ('phi',)),
    (15994428, ('phi', 'rt2'), ('rt2',)),
    (24157817, ('rt2', 'phi'), ('phi',)),
    (38613965, ('phi', 'rt2'), ('rt2',)),
    (63245986, ('rt2', 'phi'), ('phi',)),
    (93222358, ('phi', 'rt2'), ('rt2',)),
    (165580141, ('rt2', 'phi'), ('phi',)),
    (225058681, ('phi', 'rt2'), ('rt2',)),
    (433494437, ('rt2', 'phi'), ('phi',)),
    (543339720, ('phi', 'rt2'), ('rt2',)),
    (701408733, ('rt2', 'phi'), ('phi',)),
    (1311738121, ('phi', 'rt2'), ('rt2',)),
    (1836311903, ('rt2', 'phi'), ('phi',)),
    (3166815962, ('phi', 'rt2'), ('rt2',)),
    (4807526976, ('rt2', 'phi'), ('phi',)),
    (7645370045, ('phi', 'rt2'), ('rt2',)),
    (12586269025, ('rt2', 'phi'), ('phi',)),
    (18457556052, ('phi', 'rt2'), ('rt2',)),
    (32951280099, ('rt2', 'phi'), ('phi',)),
    (44560482149, ('phi', 'rt2'), ('rt2',)),
    (86267571272, ('rt2', 'phi'), ('phi',)),
    (107578520350, ('phi', 'rt2'), ('rt2',)),
    (139583862445, ('rt2', 'phi'), ('phi',)),
    (259717522849, ('phi', 'rt2'), ('rt2',)),
    (365435296162, ('rt2', 'phi'), ('phi',)),
    (627013566048, ('phi', 'rt2'), ('rt2',)),
    (956722026041, ('rt2', 'phi'), ('phi',)),
    (1513744654945, ('phi', 'rt2'), ('rt2',)),
    (2504730781961, ('rt2', 'phi'), ('phi',)),
    (3654502875938, ('phi', 'rt2'), ('rt2',)),
    (6557470319842, ('rt2', 'phi'), ('phi',)),
    (8822750406821, ('phi', 'rt2'), ('rt2',)),
    (17167680177565, ('rt2', 'phi'), ('phi',)),
    (21300003689580, ('phi', 'rt2'), ('rt2',)),
    (27777890035288, ('rt2', 'phi'), ('phi',)),
    (51422757785981, ('phi', 'rt2'), ('rt2',)),
    (72723460248141, ('rt2', 'phi'), ('phi',)),
    (124145519261542, ('phi', 'rt2'), ('rt2',)),
    (190392490709135, ('rt2', 'phi'), ('phi',)),
    (299713796309065, ('phi', 'rt2'), ('rt2',)),
    (498454011879264, ('rt2', 'phi'), ('phi',)),
    (723573111879672, ('phi', 'rt2'), ('rt2',)),
    (1304969544928657, ('rt2', 'phi'), ('phi',)),
    (1746860020068409, ('phi', 'rt2'), ('rt2',)),
    (3416454622906707, ('rt2', 'phi'), ('phi',)),
    (4217293152016490, ('phi', 'rt2'), ('rt2',)),
    (5527939700884757, ('rt2', 'phi'), ('phi',)),
    (10181446324101389, ('phi', 'rt2'), ('rt2',)),
    (14472334024676221, ('rt2', 'phi'), ('phi',)),
    (24580185800219268, ('phi', 'rt2'), ('rt2',)),
    (37889062373143906, ('rt2', 'phi'), ('phi',)),
    (59341817924539925, ('phi', 'rt2'), ('rt2',)),
    (99194853094755497, ('rt2', 'phi'), ('phi',)),
    (143263821649299118, ('phi', 'rt2'), ('rt2',)),
    (259695496911122585, ('rt2', 'phi'), ('phi',)),
    (345869461223138161, ('phi', 'rt2'), ('rt2',)),
    (679891637638612258, ('rt2', 'phi'), ('phi',)),
    (835002744095575440, ('phi', 'rt2'), ('rt2',)),
    (1100087778366101931, ('rt2', 'phi'), ('phi',)),
    (2015874949414289041, ('phi', 'rt2'), ('rt2',)),
    (2880067194370816120, ('rt2', 'phi'), ('phi',)),
    (4866752642924153522, ('phi', 'rt2'), ('rt2',)),
    (7540113804746346429, ('rt2', 'phi'), ('phi',)),
    (11749380235262596085, ('phi', 'rt2'), ('rt2',)),
    (19740274219868223167, ('rt2', 'phi'), ('phi',)),
    (28365513113449345692, ('phi', 'rt2'), ('rt2',)),
    (51680708854858323072, ('rt2', 'phi'), ('phi',)),
    (68480406462161287469, ('phi', 'rt2'), ('rt2',)),
    (135301852344706746049, ('rt2', 'phi'), ('phi',)),
    (165326326037771920630, ('phi', 'rt2'), ('rt2',)),
    (218922995834555169026, ('rt2', 'phi'), ('phi',)),
    (399133058537705128729, ('phi', 'rt2'), ('rt2',)),
    (573147844013817084101, ('rt2', 'phi'), ('phi',)),
    (963592443113182178088, ('phi', 'rt2'), ('rt2',)),
    (1500520536206896083277, ('rt2', 'phi'), ('phi',)),
    (2326317944764069484905, ('phi', 'rt2'), ('rt2',)),
    (3928413764606871165730, ('rt2', 'phi'), ('phi',)),
    (5616228332641321147898, ('phi', 'rt2'), ('rt2',)),
    (10284720757613717413913, ('rt2', 'phi'), ('phi',)),
    (13558774610046711780701, ('phi', 'rt2'), ('rt2',)),
    (26925748508234281076009, ('rt2', 'phi'), ('phi',)),
    (32733777552734744709300, ('phi', 'rt2'), ('rt2',)),
    (43566776258854844738105, ('rt2', 'phi'), ('phi',)),
    (79026329715516201199301, ('phi', 'rt2'), ('rt2',)),
    (114059301025943970552219, ('rt2', 'phi'), ('phi',)),
    (190786436983767147107902, ('phi', 'rt2'), ('rt2',)),
    (298611126818977066918552, ('rt2', 'phi'), ('phi',)),
    (460599203683050495415105, ('phi', 'rt2'), ('rt2',)),
    (781774079430987230203437, ('rt2', 'phi'), ('phi',)),
    (1111984844349868137938112, ('phi', 'rt2'), ('rt2',)),
    (2046711111473984623691759, ('rt2', 'phi'), ('phi',)),
    (2684568892382786771291329, ('phi', 'rt2'), ('rt2',)),
    (5358359254990966640871840, ('rt2', 'phi'), ('phi',)),
    (6481122629115441680520770, ('phi', 'rt2'), ('rt2',)),
    (8670007398507948658051921, ('rt2', 'phi'), ('phi',)),
    (15646814150613670132332869, ('phi', 'rt2'), ('rt2',)),
    (22698374052006863956975682, ('rt2', 'phi'), ('phi',)),
    (37774750930342781945186508, ('phi', 'rt2'), ('rt2',)),
    (59425114757512643212875125, ('rt2', 'phi'), ('phi',)),
    (91196316011299234022705885, ('phi', 'rt2'), ('rt2',)),
    (155576970220531065681649693, ('rt2', 'phi'), ('phi',)),
    (220167382952941249990598278, ('phi', 'rt2'), ('rt2',)),
    (407305795904080553832073954, ('rt2', 'phi'), ('phi',)),
    (531531081917181734003902441, ('phi', 'rt2'), ('rt2',)),
    (1066340417491710595814572169, ('rt2', 'phi'), ('phi',)),
    (1283229546787304717998403160, ('phi', 'rt2'), ('rt2',)),
    (1725375039079340637797070384, ('rt2', 'phi'), ('phi',)),
]

PAIR_SIGN_CHANGES_10_4 = 16
