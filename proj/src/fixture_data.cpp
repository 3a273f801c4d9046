// Copyright 2026 nosignal Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Embedded count tables from the published BIG Bell Test follow-up
// analysis, transcribed digit for digit. `row` lines list counts for
// every outcome tuple in flat order; `published` lines carry the
// reported chi-squared value and the tolerance its print precision
// supports, keyed by the descriptor of the matching test.

#include "nosignal/datasets.hpp"

namespace nosignal::internal {

namespace {

const char* kExp1Occurrences = R"(# nosignal table v1
provenance: experiment 1: occurrences of each of the 16 shared settings, 24117 coincidences total
party Alice setting=K outcome=A settings=1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16 outcomes=*
party Bob setting=K' outcome=B settings=* outcomes=*
row 1,* 1549
row 2,* 1478
row 3,* 1744
row 4,* 716
row 5,* 1448
row 6,* 3947
row 7,* 988
row 8,* 736
row 9,* 922
row 10,* 1529
row 11,* 3575
row 12,* 900
row 13,* 834
row 14,* 1274
row 15,* 1239
row 16,* 1238
note: settings are shared by both parties, so only occurrence statistics are testable
)";

const char* kExp2Full = R"(# nosignal table v1
provenance: experiment 2: coincidence counts by outcomes ABC (columns) at choices XYZ (rows)
party Alice setting=X outcome=A settings=0,1 outcomes=0,1
party Bob setting=Y outcome=B settings=0,1 outcomes=0,1
party Charlie setting=Z outcome=C settings=0,1 outcomes=0,1
row 0,0,0 6 23 114 16 36 240 47 5
row 0,0,1 7 14 111 21 46 245 48 6
row 0,1,0 5 25 118 21 42 187 31 8
row 0,1,1 21 9 15 131 229 39 5 25
row 1,0,0 9 18 120 13 38 226 52 2
row 1,0,1 5 31 123 30 40 219 30 7
row 1,1,0 57 224 47 8 5 18 97 31
row 1,1,1 233 23 6 44 20 2 11 110
published 0.07 0.1 A vs X | Y=0,Z=0
published 7.3 0.73 A vs X | Y=0,Z=1
published 85.4 8.54 A vs X | Y=1,Z=0
published 88.9 8.89 A vs X | Y=1,Z=1
published 0.3 0.1 B vs X | Y=0,Z=0
published 0.3 0.1 B vs X | Y=0,Z=1
published 0.9 0.1 B vs X | Y=1,Z=0
published 0.08 0.1 B vs X | Y=1,Z=1
published 1.09 0.109 B vs Y | X=0,Z=0
published 0.004 0.1 B vs Y | X=0,Z=1
published 0.2 0.1 B vs Y | X=1,Z=0
published 0.1 0.1 B vs Y | X=1,Z=1
published 0.9 0.1 C vs Y | X=0,Z=0
published 20.1 2.01 C vs Y | X=0,Z=1
published 1.2 0.12 C vs Y | X=1,Z=0
published 34.7 0.3 C vs Y | X=1,Z=1
published 0.07 0.1 C vs Z | X=0,Y=0
published 13.3 1.33 C vs Z | X=0,Y=1
published 2.4 0.24 C vs Z | X=1,Y=0
published 29.7 0.3 C vs Z | X=1,Y=1
published 1.6 0.16 C vs X | Y=0,Z=0
published 0.3 0.1 C vs X | Y=0,Z=1
published 0.6 0.1 C vs X | Y=1,Z=0
published 0.9 0.1 C vs X | Y=1,Z=1
published 3.6 0.36 A vs Y | X=0,Z=0
published 4.4 0.44 A vs Y | X=0,Z=1
published 121.8 0.5 A vs Y | X=1,Z=0
published 79.7 0.5 A vs Y | X=1,Z=1
published 0.4 0.1 A vs Z | X=0,Y=0
published 0.2 0.1 A vs Z | X=0,Y=1
published 3.1 0.31 A vs Z | X=1,Y=0
published 0.07 0.1 A vs Z | X=1,Y=1
published 5.2e-5 0.1 B vs Z | X=0,Y=0
published 1.2 0.12 B vs Z | X=0,Y=1
published 0.0002 0.1 B vs Z | X=1,Y=0
published 0.02 0.1 B vs Z | X=1,Y=1
)";

const char* kExp2MargAB = R"(# nosignal table v1
provenance: experiment 2: counts with Charlie's outcome ignored (columns AB*)
party Alice setting=X outcome=A settings=0,1 outcomes=0,1
party Bob setting=Y outcome=B settings=0,1 outcomes=0,1
party Charlie setting=Z outcome=C settings=0,1 outcomes=*
row 0,0,0 29 130 276 52
row 0,0,1 21 132 291 54
row 0,1,0 30 139 229 39
row 0,1,1 30 146 268 30
row 1,0,0 27 133 264 54
row 1,0,1 36 153 259 37
row 1,1,0 281 55 23 128
row 1,1,1 256 50 22 121
)";

const char* kExp2MargAC = R"(# nosignal table v1
provenance: experiment 2: counts with Bob's outcome ignored (columns A*C)
party Alice setting=X outcome=A settings=0,1 outcomes=0,1
party Bob setting=Y outcome=B settings=0,1 outcomes=*
party Charlie setting=Z outcome=C settings=0,1 outcomes=0,1
row 0,0,0 120 39 83 245
row 0,0,1 118 35 94 251
row 0,1,0 123 46 73 195
row 0,1,1 36 140 234 64
row 1,0,0 129 31 90 228
row 1,0,1 128 61 70 226
row 1,1,0 104 232 102 49
row 1,1,1 239 67 31 112
)";

const char* kExp2MargBC = R"(# nosignal table v1
provenance: experiment 2: counts with Alice's outcome ignored (columns *BC)
party Alice setting=X outcome=A settings=0,1 outcomes=*
party Bob setting=Y outcome=B settings=0,1 outcomes=0,1
party Charlie setting=Z outcome=C settings=0,1 outcomes=0,1
row 0,0,0 42 263 161 21
row 0,0,1 53 259 159 27
row 0,1,0 47 212 149 29
row 0,1,1 250 48 20 156
row 1,0,0 47 244 172 15
row 1,0,1 45 250 153 37
row 1,1,0 62 242 144 39
row 1,1,1 253 25 17 154
)";

const char* kExp2MargA = R"(# nosignal table v1
provenance: experiment 2: counts with Bob's and Charlie's outcomes ignored (columns A**)
party Alice setting=X outcome=A settings=0,1 outcomes=0,1
party Bob setting=Y outcome=B settings=0,1 outcomes=*
party Charlie setting=Z outcome=C settings=0,1 outcomes=*
row 0,0,0 159 328
row 0,0,1 153 345
row 0,1,0 169 268
row 0,1,1 176 298
row 1,0,0 160 318
row 1,0,1 189 296
row 1,1,0 336 151
row 1,1,1 306 143
)";

const char* kExp2MargB = R"(# nosignal table v1
provenance: experiment 2: counts with Alice's and Charlie's outcomes ignored (columns *B*)
party Alice setting=X outcome=A settings=0,1 outcomes=*
party Bob setting=Y outcome=B settings=0,1 outcomes=0,1
party Charlie setting=Z outcome=C settings=0,1 outcomes=*
row 0,0,0 305 182
row 0,0,1 312 186
row 0,1,0 259 178
row 0,1,1 298 176
row 1,0,0 291 187
row 1,0,1 295 190
row 1,1,0 304 183
row 1,1,1 278 171
)";

const char* kExp2MargC = R"(# nosignal table v1
provenance: experiment 2: counts with Alice's and Bob's outcomes ignored (columns **C)
party Alice setting=X outcome=A settings=0,1 outcomes=*
party Bob setting=Y outcome=B settings=0,1 outcomes=*
party Charlie setting=Z outcome=C settings=0,1 outcomes=0,1
row 0,0,0 203 284
row 0,0,1 212 286
row 0,1,0 196 241
row 0,1,1 270 204
row 1,0,0 219 259
row 1,0,1 198 287
row 1,1,0 206 281
row 1,1,1 270 179
)";

const char* kExp2Totals = R"(# nosignal table v1
provenance: experiment 2: total coincidences per choice tuple XYZ
party Alice setting=X outcome=A settings=0,1 outcomes=*
party Bob setting=Y outcome=B settings=0,1 outcomes=*
party Charlie setting=Z outcome=C settings=0,1 outcomes=*
row 0,0,0 487
row 0,0,1 498
row 0,1,0 437
row 0,1,1 474
row 1,0,0 478
row 1,0,1 485
row 1,1,0 487
row 1,1,1 449
)";

const char* kExp5Full = R"(# nosignal table v1
provenance: experiment 5: coincidence counts by outcomes ABC (columns) at choices XYZ (rows)
party Alice setting=X outcome=A settings=0,1 outcomes=0,1
party Bob setting=Y outcome=B settings=0,1 outcomes=0,1
party Charlie setting=Z outcome=C settings=0,1 outcomes=0,1
row 0,0,0 586 376 353 628 535 1310 1220 569
row 0,0,1 716 357 436 748 676 1434 1476 611
row 0,1,0 1557 794 846 1675 1530 3225 3018 1458
row 0,1,1 302 516 724 233 1344 399 425 1077
row 1,0,0 741 548 551 844 704 1485 1482 659
row 1,0,1 1395 939 1060 1375 1187 2565 2586 1065
row 1,1,0 332 743 726 284 893 403 416 1010
row 1,1,1 763 172 208 513 290 741 892 263
published 15.69 0.07845 A vs X | Y=0,Z=0
published 31.81 0.15905 A vs X | Y=0,Z=1
published 120.15 0.60075 A vs X | Y=1,Z=0
published 55.007 0.275035 A vs X | Y=1,Z=1
published 0.004 0.1 B vs Y | X=0,Z=0
published 3.2 0.32 B vs Y | X=0,Z=1
published 0.07 0.1 B vs Y | X=1,Z=0
published 1.60 0.16 B vs Y | X=1,Z=1
published 9.97 0.997 C vs Z | X=0,Y=0
published 60.48 6.048 C vs Z | X=0,Y=1
published 4.44 0.444 C vs Z | X=1,Y=0
published 39.55 3.955 C vs Z | X=1,Y=1
published 0.69 0.1 B vs X | Y=0,Z=0
published 0.78 0.1 B vs X | Y=0,Z=1
published 1.61 0.161 B vs X | Y=1,Z=0
published 0.02 0.1 B vs X | Y=1,Z=1
published 2.04 0.204 C vs X | Y=0,Z=0
published 0.001 0.1 C vs X | Y=0,Z=1
published 0.003 0.1 C vs X | Y=1,Z=0
published 0.11 0.1 C vs X | Y=1,Z=1
published 0.15 0.1 A vs Y | X=0,Z=0
published 0.18 0.1 A vs Y | X=0,Z=1
published 30.92 3.092 A vs Y | X=1,Z=0
published 18.70 1.87 A vs Y | X=1,Z=1
published 1.54 0.154 C vs Y | X=0,Z=0
published 22.80 0.3 C vs Y | X=0,Z=1
published 0.13 0.1 C vs Y | X=1,Z=0
published 27.78 0.3 C vs Y | X=1,Z=1
published 0.02 0.1 A vs Z | X=0,Y=0
published 1.07 0.107 A vs Z | X=0,Y=1
published 1.56 0.156 A vs Z | X=1,Y=0
published 0.06 0.1 A vs Z | X=1,Y=1
published 1.22 0.122 B vs Z | X=0,Y=0
published 0.58 0.1 B vs Z | X=0,Y=1
published 0.30 0.1 B vs Z | X=1,Y=0
published 2.91 0.291 B vs Z | X=1,Y=1
published 48 0.5 subtable rows 0,1,0 1,1,0 cols *,0,0 *,0,1
published 24 0.5 subtable rows 1,0,0 1,1,1 cols 0,*,* 1,*,*
note: the correction multiplier reported alongside these tests was about 100; this battery emits 36 tests
)";

const char* kExp5MargAB = R"(# nosignal table v1
provenance: experiment 5: counts with Charlie's outcome ignored (columns AB*)
party Alice setting=X outcome=A settings=0,1 outcomes=0,1
party Bob setting=Y outcome=B settings=0,1 outcomes=0,1
party Charlie setting=Z outcome=C settings=0,1 outcomes=*
row 0,0,0 962 981 1845 1789
row 0,0,1 1073 1184 2110 2087
row 0,1,0 2351 2521 4755 4476
row 0,1,1 818 957 1743 1502
row 1,0,0 1289 1395 2189 2141
row 1,0,1 2334 2435 3752 3651
row 1,1,0 1075 1010 1296 1426
row 1,1,1 935 721 1031 1155
)";

const char* kExp5MargAC = R"(# nosignal table v1
provenance: experiment 5: counts with Bob's outcome ignored (columns A*C)
party Alice setting=X outcome=A settings=0,1 outcomes=0,1
party Bob setting=Y outcome=B settings=0,1 outcomes=*
party Charlie setting=Z outcome=C settings=0,1 outcomes=0,1
row 0,0,0 939 1004 1755 1879
row 0,0,1 1152 1105 2152 2045
row 0,1,0 2403 2469 4548 4683
row 0,1,1 1026 749 1769 1476
row 1,0,0 1292 1392 2186 2144
row 1,0,1 2455 2314 3773 3630
row 1,1,0 1058 1027 1309 1413
row 1,1,1 971 685 1182 1004
)";

const char* kExp5MargBC = R"(# nosignal table v1
provenance: experiment 5: counts with Alice's outcome ignored (columns *BC)
party Alice setting=X outcome=A settings=0,1 outcomes=*
party Bob setting=Y outcome=B settings=0,1 outcomes=0,1
party Charlie setting=Z outcome=C settings=0,1 outcomes=0,1
row 0,0,0 1121 1686 1573 1197
row 0,0,1 1392 1791 1912 1359
row 0,1,0 3087 4019 3864 3133
row 0,1,1 1646 915 1149 1310
row 1,0,0 1445 2033 2033 1503
row 1,0,1 2582 3504 3646 2440
row 1,1,0 1225 1146 1142 1294
row 1,1,1 1053 913 1100 776
)";

const char* kExp5MargA = R"(# nosignal table v1
provenance: experiment 5: counts with Bob's and Charlie's outcomes ignored (columns A**)
party Alice setting=X outcome=A settings=0,1 outcomes=0,1
party Bob setting=Y outcome=B settings=0,1 outcomes=*
party Charlie setting=Z outcome=C settings=0,1 outcomes=*
row 0,0,0 1943 3634
row 0,0,1 2257 4197
row 0,1,0 4872 9231
row 0,1,1 1775 3245
row 1,0,0 2684 4330
row 1,0,1 4769 7403
row 1,1,0 2085 2722
row 1,1,1 1656 2186
)";

const char* kExp5MargB = R"(# nosignal table v1
provenance: experiment 5: counts with Alice's and Charlie's outcomes ignored (columns *B*)
party Alice setting=X outcome=A settings=0,1 outcomes=*
party Bob setting=Y outcome=B settings=0,1 outcomes=0,1
party Charlie setting=Z outcome=C settings=0,1 outcomes=*
row 0,0,0 2807 2770
row 0,0,1 3183 3271
row 0,1,0 7106 6997
row 0,1,1 2561 2459
row 1,0,0 3478 3536
row 1,0,1 6086 6086
row 1,1,0 2371 2436
row 1,1,1 1966 1876
)";

const char* kExp5MargC = R"(# nosignal table v1
provenance: experiment 5: counts with Alice's and Bob's outcomes ignored (columns **C)
party Alice setting=X outcome=A settings=0,1 outcomes=*
party Bob setting=Y outcome=B settings=0,1 outcomes=*
party Charlie setting=Z outcome=C settings=0,1 outcomes=0,1
row 0,0,0 2694 2883
row 0,0,1 3304 3150
row 0,1,0 6951 7152
row 0,1,1 2795 2225
row 1,0,0 3478 3536
row 1,0,1 6228 5944
row 1,1,0 2367 2440
row 1,1,1 2153 1689
)";

const char* kExp5Totals = R"(# nosignal table v1
provenance: experiment 5: total coincidences per choice tuple XYZ
party Alice setting=X outcome=A settings=0,1 outcomes=*
party Bob setting=Y outcome=B settings=0,1 outcomes=*
party Charlie setting=Z outcome=C settings=0,1 outcomes=*
row 0,0,0 5577
row 0,0,1 6454
row 0,1,0 14103
row 0,1,1 5020
row 1,0,0 7014
row 1,0,1 12172
row 1,1,0 4807
row 1,1,1 3842
)";

const char* kExp4Qrn1Full = R"(# nosignal table v1
provenance: experiment 4 QRN1 run: full coincidence counts for choices XY (rows) and outcomes AB (columns)
party Alice setting=X outcome=A settings=0,1 outcomes=0,1
party Bob setting=Y outcome=B settings=0,1 outcomes=0,1
row 0,0 6260 26698 26678 4827
row 0,1 34992 5743 5696 28284
row 1,0 38340 7610 6774 30524
row 1,1 33318 6494 6505 25722
published 159.9 0.7995 A vs Y | X=0
published 0.07 0.05 A vs Y | X=1
published 139.7 0.6985 B vs X | Y=0
published 10.01 0.05005 B vs X | Y=1
published 1561.17 7.80585 totals 0,0 0,1 1,0 1,1
published 28 0.5 subtable rows 1,0 1,1 cols 0,0 1,0
)";

const char* kExp4Hrn1MargA = R"(# nosignal table v1
provenance: experiment 4 HRN1 run: counts for A=0,1 with Bob's outcome ignored
party Alice setting=X outcome=A settings=0,1 outcomes=0,1
party Bob setting=Y outcome=B settings=0,1 outcomes=*
row 0,0 13775 13158
row 0,1 29096 24668
row 1,0 16316 13154
row 1,1 27466 22545
published 63.6 0.318 A vs Y | X=0
published 1.4 0.05 A vs Y | X=1
)";

const char* kExp4Hrn1MargB = R"(# nosignal table v1
provenance: experiment 4 HRN1 run: counts for B=0,1 with Alice's outcome ignored
party Alice setting=X outcome=A settings=0,1 outcomes=*
party Bob setting=Y outcome=B settings=0,1 outcomes=0,1
row 0,0 13737 13196
row 0,1 29108 24656
row 1,0 15981 13489
row 1,1 27724 22287
published 58.6 0.293 B vs X | Y=0
published 17.5 0.0875 B vs X | Y=1
)";

const char* kExp4Qrn1MargA = R"(# nosignal table v1
provenance: experiment 4 QRN1 run: counts for A=0,1 with Bob's outcome ignored (as printed)
party Alice setting=X outcome=A settings=0,1 outcomes=0,1
party Bob setting=Y outcome=B settings=0,1 outcomes=*
row 0,0 32958 31505
row 0,1 40735 33980
row 1,0 45950 37298
row 1,1 39812 32227
)";

const char* kExp4Qrn1MargB = R"(# nosignal table v1
provenance: experiment 4 QRN1 run: counts for B=0,1 with Alice's outcome ignored (as printed)
party Alice setting=X outcome=A settings=0,1 outcomes=*
party Bob setting=Y outcome=B settings=0,1 outcomes=0,1
row 0,0 32938 31525
row 0,1 40668 34027
row 1,0 45114 38134
row 1,1 39823 32216
note: the printed B=0 count at XY=01 (40668) is inconsistent with the full table, which gives 40688
)";

const char* kExp4Hrn2MargA = R"(# nosignal table v1
provenance: experiment 4 HRN2 run: counts for A=0,1 with Bob's outcome ignored
party Alice setting=X outcome=A settings=0,1 outcomes=0,1
party Bob setting=Y outcome=B settings=0,1 outcomes=*
row 0,0 8409 7890
row 0,1 16650 14333
row 1,0 10333 8384
row 1,1 16069 12956
published 19.7 0.0985 A vs Y | X=0
published 0.1 0.05 A vs Y | X=1
)";

const char* kExp4Hrn2MargB = R"(# nosignal table v1
provenance: experiment 4 HRN2 run: counts for B=0,1 with Alice's outcome ignored
party Alice setting=X outcome=A settings=0,1 outcomes=*
party Bob setting=Y outcome=B settings=0,1 outcomes=0,1
row 0,0 8290 8009
row 0,1 16638 14345
row 1,0 10106 8611
row 1,1 16091 12934
published 34.3 0.1715 B vs X | Y=0
published 18.3 0.0915 B vs X | Y=1
)";

const char* kExp4Db2MargA = R"(# nosignal table v1
provenance: experiment 4 DB2 run: counts for A=0,1 with Bob's outcome ignored
party Alice setting=X outcome=A settings=0,1 outcomes=0,1
party Bob setting=Y outcome=B settings=0,1 outcomes=*
row 0,0 36403 34316
row 0,1 53112 45172
row 1,0 42026 33546
row 1,1 51384 41504
published 108.5 0.5425 A vs Y | X=0
published 1.4 0.05 A vs Y | X=1
)";

const char* kExp4Db2MargB = R"(# nosignal table v1
provenance: experiment 4 DB2 run: counts for B=0,1 with Alice's outcome ignored
party Alice setting=X outcome=A settings=0,1 outcomes=*
party Bob setting=Y outcome=B settings=0,1 outcomes=0,1
row 0,0 36028 34691
row 0,1 53108 45176
row 1,0 41066 34506
row 1,1 51528 41360
published 168.9 0.8445 B vs X | Y=0
published 39.8 0.199 B vs X | Y=1
)";

const char* kExp4Hrn1Totals = R"(# nosignal table v1
provenance: experiment 4 HRN1 run: total counts per choice tuple XY
party Alice setting=X outcome=A settings=0,1 outcomes=*
party Bob setting=Y outcome=B settings=0,1 outcomes=*
row 0,0 26933
row 0,1 53764
row 1,0 29470
row 1,1 50011
published 240.62 1.2031 totals 0,0 0,1 1,0 1,1
)";

const char* kExp4Qrn1Totals = R"(# nosignal table v1
provenance: experiment 4 QRN1 run: total counts per choice tuple XY (as printed)
party Alice setting=X outcome=A settings=0,1 outcomes=*
party Bob setting=Y outcome=B settings=0,1 outcomes=*
row 0,0 64463
row 0,1 74695
row 1,0 83248
row 1,1 72039
note: the printed total at XY=01 (74695) is inconsistent with the full table, which gives 74715
)";

const char* kExp4Hrn2Totals = R"(# nosignal table v1
provenance: experiment 4 HRN2 run: total counts per choice tuple XY
party Alice setting=X outcome=A settings=0,1 outcomes=*
party Bob setting=Y outcome=B settings=0,1 outcomes=*
row 0,0 16299
row 0,1 30983
row 1,0 18717
row 1,1 29025
published 228.64 1.1432 totals 0,0 0,1 1,0 1,1
)";

const char* kExp4Db2Totals = R"(# nosignal table v1
provenance: experiment 4 DB2 run: total counts per choice tuple XY
party Alice setting=X outcome=A settings=0,1 outcomes=*
party Bob setting=Y outcome=B settings=0,1 outcomes=*
row 0,0 70719
row 0,1 98284
row 1,0 75572
row 1,1 92888
published 312.43 1.56215 totals 0,0 0,1 1,0 1,1
)";

const char* kExp6HrnMargA = R"(# nosignal table v1
provenance: experiment 6 HRN run: counts for A=0,1 with Bob's outcome ignored
party Alice setting=X outcome=A settings=0,1 outcomes=0,1
party Bob setting=Y outcome=B settings=0,1 outcomes=*
row 0,0 2883 2462
row 0,1 2635 2253
row 1,0 2697 2224
row 1,1 2520 2041
published 0.001 0.1 A vs Y | X=0
published 0.19 0.1 A vs Y | X=1
)";

const char* kExp6HrnMargB = R"(# nosignal table v1
provenance: experiment 6 HRN run: counts for B=0,1 with Alice's outcome ignored
party Alice setting=X outcome=A settings=0,1 outcomes=*
party Bob setting=Y outcome=B settings=0,1 outcomes=0,1
row 0,0 2707 2638
row 0,1 2285 2603
row 1,0 2440 2481
row 1,1 2470 2092
published 1.16 0.116 B vs X | Y=0
published 51 0.5 B vs X | Y=1
published 15.5 0.3 B vs Y | X=0
published 19.7 0.3 B vs Y | X=1
)";

const char* kExp6QrnMargA = R"(# nosignal table v1
provenance: experiment 6 QRN run: counts for A=0,1 with Bob's outcome ignored
party Alice setting=X outcome=A settings=0,1 outcomes=0,1
party Bob setting=Y outcome=B settings=0,1 outcomes=*
row 0,0 2845 2403
row 0,1 2773 2335
row 1,0 2644 2137
row 1,1 2658 2103
published 0.006 0.1 A vs Y | X=0
published 0.27 0.1 A vs Y | X=1
)";

const char* kExp6QrnMargB = R"(# nosignal table v1
provenance: experiment 6 QRN run: counts for B=0,1 with Alice's outcome ignored
party Alice setting=X outcome=A settings=0,1 outcomes=*
party Bob setting=Y outcome=B settings=0,1 outcomes=0,1
row 0,0 2649 2599
row 0,1 2387 2721
row 1,0 2368 2413
row 1,1 2648 2113
published 0.9 0.1 B vs X | Y=0
published 78 0.5 B vs X | Y=1
published 14.5 0.3 B vs Y | X=0
published 35.5 0.3 B vs Y | X=1
)";

const char* kExp6HrnTotals = R"(# nosignal table v1
provenance: experiment 6 HRN run: total counts per choice tuple XY
party Alice setting=X outcome=A settings=0,1 outcomes=*
party Bob setting=Y outcome=B settings=0,1 outcomes=*
row 0,0 5345
row 0,1 4888
row 1,0 4921
row 1,1 4562
published 0.23 0.05 totals 0,0 0,1 1,0 1,1
)";

const char* kExp6QrnTotals = R"(# nosignal table v1
provenance: experiment 6 QRN run: total counts per choice tuple XY
party Alice setting=X outcome=A settings=0,1 outcomes=*
party Bob setting=Y outcome=B settings=0,1 outcomes=*
row 0,0 5248
row 0,1 5108
row 1,0 4781
row 1,1 4761
)";

const char* kExp9MargA = R"(# nosignal table v1
provenance: experiment 9: counts for A=0,1 with Bob's outcome ignored
party Alice setting=X outcome=A settings=0,1 outcomes=0,1
party Bob setting=Y outcome=B settings=0,1 outcomes=*
row 0,0 65 124
row 0,1 129 213
row 1,0 81 275
row 1,1 63 150
published 0.58 0.05 A vs Y | X=0
published 3.28 0.05 A vs Y | X=1
note: printed labels are swapped relative to direct recomputation (printed X=0 -> 3.28, X=1 -> 0.58); values here follow recomputation
)";

const char* kExp9MargB = R"(# nosignal table v1
provenance: experiment 9: counts for B=0,1 with Alice's outcome ignored
party Alice setting=X outcome=A settings=0,1 outcomes=*
party Bob setting=Y outcome=B settings=0,1 outcomes=0,1
row 0,0 59 130
row 0,1 166 176
row 1,0 102 254
row 1,1 145 68
published 0.39 0.05 B vs X | Y=0
published 20.34 0.1 B vs X | Y=1
note: printed labels are swapped relative to direct recomputation (printed Y=0 -> 20.34, Y=1 -> 0.39); values here follow recomputation
)";

const char* kExp9Trials = R"(# nosignal table v1
provenance: experiment 9: number of trials per choice tuple XY
party Alice setting=X outcome=A settings=0,1 outcomes=*
party Bob setting=Y outcome=B settings=0,1 outcomes=*
row 0,0 94433
row 0,1 191674
row 1,0 191332
row 1,1 122561
)";

const char* kExp10Weighted = R"(# nosignal weighted v1
provenance: experiment 10: weighted counts N = sum C/T with errors e (e^2 = sum C/T^2) for B=0, per phase and choice tuple XY
labels 0,0 0,1 1,0 1,1
wrow 140 7.83 0.56 6.17 0.54 5.44 0.47 4.20 0.42
wrow 151 10.67 0.74 8.75 0.83 6.17 0.73 3.15 0.48
wrow 160 7.00 0.92 6.96 0.79 4.48 0.77 4.08 0.68
wrow 170 8.98 0.73 6.78 0.75 6.60 0.73 3.39 0.50
wrow 183 9.00 0.75 7.03 0.64 6.20 0.77 4.33 0.63
wrow 197 8.91 0.83 7.45 0.96 5.18 0.68 3.80 0.59
wrow 215 8.82 0.85 9.48 1.34 6.03 0.72 3.94 0.69
wrow 232 8.17 0.61 6.99 0.76 5.80 0.77 5.00 0.65
wrow 250 5.79 0.66 8.24 0.76 6.92 0.63 5.71 0.64
wrow 267 7.04 0.78 7.37 0.87 7.54 0.82 2.82 0.67
wrow 284 7.14 0.77 7.28 0.75 5.44 0.71 5.61 0.82
wrow 298 6.70 0.79 7.05 0.87 5.55 0.69 6.40 0.82
wrow 321 7.82 0.76 5.43 0.76 6.84 1.03 4.87 0.60
wrow 342 6.01 0.65 5.71 0.77 7.97 0.86 6.64 0.77
wrow 352 7.07 0.67 6.99 0.82 5.90 0.63 7.13 0.83
wrow 358 7.91 0.63 4.56 0.58 7.98 0.74 7.51 0.74
wrow all 124.87 2.95 112.25 3.27 100.06 2.97 78.59 2.67
published 0.01 0.15 weighted | phase=140
published 4.80 0.15 weighted | phase=151
published 0.09 0.15 weighted | phase=160
published 2.97 0.15 weighted | phase=170
published 0.26 0.15 weighted | phase=183
published 0.27 0.15 weighted | phase=197
published 3.78 0.15 weighted | phase=215
published 0.00 0.15 weighted | phase=232
published 7.23 0.15 weighted | phase=250
published 13.98 0.15 weighted | phase=267
published 0.00 0.15 weighted | phase=284
published 0.14 0.15 weighted | phase=298
published 0.01 0.15 weighted | phase=321
published 0.32 0.15 weighted | phase=342
published 0.89 0.15 weighted | phase=352
published 6.18 0.15 weighted | phase=358
published 5.37 0.15 weighted | phase=all
note: the look-elsewhere multiplier for the per-phase battery is 16, the number of phases
)";

const char* kExp12Full = R"(# nosignal table v1
provenance: experiment 12: total counts at choices XY (rows) for each outcome configuration AB
party Alice setting=X outcome=A settings=0,1 outcomes=0,1
party Bob setting=Y outcome=B settings=0,1 outcomes=0,1
row 0,0 2296 672 647 2248
row 0,1 1796 717 762 1781
row 1,0 2332 282 324 2338
row 1,1 318 1896 1908 359
published 348 2 M=NE 0,1 vs 1,0
published 0.3 0.1 totals 0,0 0,1 1,0 1,1
)";

const char* kExp12MargA = R"(# nosignal table v1
provenance: experiment 12: counts for A=0,1 with Bob's outcome ignored
party Alice setting=X outcome=A settings=0,1 outcomes=0,1
party Bob setting=Y outcome=B settings=0,1 outcomes=*
row 0,0 2968 2895
row 0,1 2513 2543
row 1,0 2614 2662
row 1,1 2214 2267
)";

const char* kExp12MargB = R"(# nosignal table v1
provenance: experiment 12: counts for B=0,1 with Alice's outcome ignored
party Alice setting=X outcome=A settings=0,1 outcomes=*
party Bob setting=Y outcome=B settings=0,1 outcomes=0,1
row 0,0 2943 2920
row 0,1 2558 2498
row 1,0 2656 2620
row 1,1 2226 2255
)";

const char* kExp12Totals = R"(# nosignal table v1
provenance: experiment 12: total coincidences per choice tuple XY
party Alice setting=X outcome=A settings=0,1 outcomes=*
party Bob setting=Y outcome=B settings=0,1 outcomes=*
row 0,0 5863
row 0,1 5056
row 1,0 5276
row 1,1 4481
)";

const char* kExp13ABins = R"(# nosignal table v1
provenance: experiment 13: counts per Alice time bin (0 = no detection) with Bob's outcome ignored, at choices XY
party Alice setting=X outcome=A settings=0,1 outcomes=0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15 nodetect=0
party Bob setting=Y outcome=B settings=0,1 outcomes=*
row 0,0 11636736 2195 2233 2119 2136 2310 2228 2205 2206 2195 2299 2320 2245 2241 2234 2169
row 0,1 10237027 1935 1944 2007 1997 1967 1934 1956 1921 1941 1905 1869 1931 2093 2013 2009
row 1,0 10510154 7185 7695 7672 7652 7692 7765 7690 7927 7953 7995 7900 7886 7755 7831 7856
row 1,1 9240316 6088 6675 6739 6841 6708 6798 6908 6931 6824 6788 7016 6911 7124 6921 6958
published 8 0.5 A(bin 11 vs 0) vs Y | X=0
note: counts embed the printed rows under the last-event-at-11 stopping rule; the raw stream needed to rederive it is not published
)";

const char* kExp13BBins = R"(# nosignal table v1
provenance: experiment 13: counts per Bob time bin (0 = no detection) with Alice's outcome ignored, at choices XY
party Alice setting=X outcome=A settings=0,1 outcomes=*
party Bob setting=Y outcome=B settings=0,1 outcomes=0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15 nodetect=0
row 0,0 11636613 2197 2322 2217 2186 2219 2249 2194 2218 2222 2239 2346 2251 2172 2245 2181
row 0,1 10160066 6651 6491 6912 7108 7155 6881 7051 7055 7221 7210 7195 7238 7437 7429 7349
row 1,0 10596353 1945 2014 1991 2014 1996 1964 1977 2055 2085 2061 2003 2045 1991 2022 2092
row 1,1 9246131 6138 5860 6214 6291 6429 6396 6434 6485 6473 6677 6507 6551 6631 6619 6713
)";

const char* kExp13Totals = R"(# nosignal table v1
provenance: experiment 13: total events per choice tuple XY
party Alice setting=X outcome=A settings=0,1 outcomes=*
party Bob setting=Y outcome=B settings=0,1 outcomes=*
row 0,0 11670071
row 0,1 10266449
row 1,0 10626608
row 1,1 9342546
published 1 0.5 totals 0,0 0,1 1,0 1,1
)";

}  // namespace

const std::vector<std::pair<const char*, const char*>>& raw_fixtures() {
  static const std::vector<std::pair<const char*, const char*>> fixtures = {
      {"exp1.occurrences", kExp1Occurrences},
      {"exp2.full", kExp2Full},
      {"exp2.marg.ab", kExp2MargAB},
      {"exp2.marg.ac", kExp2MargAC},
      {"exp2.marg.bc", kExp2MargBC},
      {"exp2.marg.a", kExp2MargA},
      {"exp2.marg.b", kExp2MargB},
      {"exp2.marg.c", kExp2MargC},
      {"exp2.totals", kExp2Totals},
      {"exp4.qrn1.full", kExp4Qrn1Full},
      {"exp4.hrn1.amarg", kExp4Hrn1MargA},
      {"exp4.hrn1.bmarg", kExp4Hrn1MargB},
      {"exp4.qrn1.amarg", kExp4Qrn1MargA},
      {"exp4.qrn1.bmarg", kExp4Qrn1MargB},
      {"exp4.hrn2.amarg", kExp4Hrn2MargA},
      {"exp4.hrn2.bmarg", kExp4Hrn2MargB},
      {"exp4.db2.amarg", kExp4Db2MargA},
      {"exp4.db2.bmarg", kExp4Db2MargB},
      {"exp4.hrn1.totals", kExp4Hrn1Totals},
      {"exp4.qrn1.totals", kExp4Qrn1Totals},
      {"exp4.hrn2.totals", kExp4Hrn2Totals},
      {"exp4.db2.totals", kExp4Db2Totals},
      {"exp5.full", kExp5Full},
      {"exp5.marg.ab", kExp5MargAB},
      {"exp5.marg.ac", kExp5MargAC},
      {"exp5.marg.bc", kExp5MargBC},
      {"exp5.marg.a", kExp5MargA},
      {"exp5.marg.b", kExp5MargB},
      {"exp5.marg.c", kExp5MargC},
      {"exp5.totals", kExp5Totals},
      {"exp6.hrn.amarg", kExp6HrnMargA},
      {"exp6.hrn.bmarg", kExp6HrnMargB},
      {"exp6.qrn.amarg", kExp6QrnMargA},
      {"exp6.qrn.bmarg", kExp6QrnMargB},
      {"exp6.hrn.totals", kExp6HrnTotals},
      {"exp6.qrn.totals", kExp6QrnTotals},
      {"exp9.amarg", kExp9MargA},
      {"exp9.bmarg", kExp9MargB},
      {"exp9.trials", kExp9Trials},
      {"exp10.weighted", kExp10Weighted},
      {"exp12.full", kExp12Full},
      {"exp12.amarg", kExp12MargA},
      {"exp12.bmarg", kExp12MargB},
      {"exp12.totals", kExp12Totals},
      {"exp13.abins", kExp13ABins},
      {"exp13.bbins", kExp13BBins},
      {"exp13.totals", kExp13Totals},
  };
  return fixtures;
}

}  // namespace nosignal::internal
