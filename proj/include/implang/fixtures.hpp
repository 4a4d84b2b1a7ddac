#pragma once

// Validation perplexity checkpoints for nine languages under all nine
// variants, two decimals as printed. Column order follows kFixtureVariants.

#include <array>
#include <cstddef>
#include <string_view>

#include "implang/curves.hpp"

namespace implang::fixtures {

inline constexpr std::size_t kNumLanguages = 9;
inline constexpr std::size_t kNumVariants = 9;
inline constexpr std::size_t kNumCheckpoints = 30;

inline constexpr std::array<std::string_view, kNumLanguages> kLanguages = {
    "danish", "english", "finnish", "french",  "german",
    "greek",  "hebrew",  "italian", "russian"};

// Variant names in the column order of every table.
inline constexpr std::array<std::string_view, kNumVariants> kFixtureVariants = {
    "no_perturb",     "hop_baseline",    "reverse_baseline",
    "shuffle_global", "shuffle_local",   "reverse_partial",
    "reverse_full",   "switch",          "hop"};

struct Row {
  int step;
  std::array<double, kNumVariants> perplexity;
};

using Table = std::array<Row, kNumCheckpoints>;

// clang-format off
inline constexpr std::array<Table, kNumLanguages> kTables = {{
    // danish
    Table{{
        Row{100, {1021.06,  778.21,  846.65, 1055.02, 1153.51,  850.48,  843.68,  905.47,  793.91}},
        Row{200, { 922.74,  771.50,  792.80,  958.23, 1039.88,  847.71,  789.62,  840.92,  754.46}},
        Row{300, { 931.30,  752.19,  818.60,  917.79,  994.73,  793.39,  800.26,  826.70,  742.49}},
        Row{400, { 921.55,  738.37,  810.82,  928.77,  960.16,  784.24,  749.02,  797.81,  716.60}},
        Row{500, { 886.66,  722.91,  771.33,  917.70,  972.17,  760.47,  763.61,  794.08,  708.74}},
        Row{600, { 877.74,  719.52,  756.94,  909.99,  987.55,  744.90,  753.54,  788.99,  709.14}},
        Row{700, { 868.42,  699.92,  735.11,  847.40,  947.24,  753.14,  750.14,  817.16,  683.36}},
        Row{800, { 861.59,  682.90,  731.44,  881.35,  908.79,  741.35,  734.94,  770.36,  680.42}},
        Row{900, { 852.54,  683.37,  727.89, 1021.24,  900.31,  719.41,  736.22,  745.94,  663.89}},
        Row{1000, { 831.34,  679.82,  725.18,  833.02,  901.95,  717.32,  722.21,  746.93,  672.51}},
        Row{1100, { 836.01,  663.09,  732.45,  818.90,  874.21,  710.58,  707.00,  740.19,  651.39}},
        Row{1200, { 823.17,  653.50,  713.48,  822.36,  865.35,  707.62,  712.82,  726.08,  653.31}},
        Row{1300, { 809.58,  661.73,  697.47,  802.83,  862.40,  702.47,  699.34,  727.18,  650.03}},
        Row{1400, { 824.97,  648.67,  695.24,  820.72,  861.76,  699.30,  690.32,  720.81,  645.93}},
        Row{1500, { 803.36,  648.93,  692.46,  797.07,  849.90,  694.42,  698.58,  716.68,  648.80}},
        Row{1600, { 798.57,  638.21,  689.84,  799.49,  839.93,  693.94,  689.40,  715.63,  637.06}},
        Row{1700, { 805.73,  637.31,  691.19,  789.27,  831.20,  691.30,  683.34,  707.93,  637.32}},
        Row{1800, { 791.25,  631.30,  686.12,  785.45,  832.99,  691.44,  679.41,  705.90,  633.73}},
        Row{1900, { 777.54,  626.11,  681.21,  787.13,  829.00,  682.23,  674.52,  702.63,  631.81}},
        Row{2000, { 783.57,  627.26,  669.60,  778.91,  828.19,  680.16,  678.44,  701.44,  626.68}},
        Row{2100, { 783.03,  626.74,  667.78,  775.11,  828.88,  673.71,  677.67,  699.07,  626.15}},
        Row{2200, { 775.75,  624.76,  669.38,  769.89,  823.46,  674.31,  675.42,  698.01,  626.52}},
        Row{2300, { 777.32,  621.46,  670.84,  769.34,  819.21,  672.09,  673.20,  696.34,  622.71}},
        Row{2400, { 777.06,  622.80,  663.38,  768.18,  816.97,  670.85,  671.80,  694.01,  619.82}},
        Row{2500, { 775.85,  622.28,  666.14,  765.23,  816.61,  671.15,  669.41,  690.55,  621.05}},
        Row{2600, { 771.74,  620.61,  662.65,  765.82,  816.43,  669.88,  664.10,  690.70,  616.82}},
        Row{2700, { 769.96,  618.59,  664.45,  765.06,  812.73,  667.21,  660.48,  689.12,  615.26}},
        Row{2800, { 769.29,  617.24,  662.38,  761.97,  811.49,  665.48,  661.28,  688.56,  613.33}},
        Row{2900, { 767.82,  614.79,  661.56,  760.37,  810.06,  664.45,  660.86,  686.93,  612.72}},
        Row{3000, { 767.96,  614.33,  661.02,  759.19,  809.48,  663.67,  661.03,  686.47,  611.53}},
    }},
    // english
    Table{{
        Row{100, {1381.03, 1018.57, 1292.20, 1402.65, 1457.92, 1287.69, 1216.70, 1310.33, 1028.35}},
        Row{200, {1299.82,  986.43, 1185.81, 1328.37, 1366.86, 1215.61, 1139.46, 1245.14,  953.84}},
        Row{300, {1219.38,  946.87, 1149.40, 1264.59, 1307.46, 1157.20, 1108.61, 1206.94,  935.29}},
        Row{400, {1200.54,  942.44, 1115.67, 1235.18, 1287.80, 1114.21, 1095.40, 1187.00,  906.56}},
        Row{500, {1191.32,  916.53, 1088.63, 1203.13, 1272.14, 1114.52, 1103.72, 1180.88,  905.11}},
        Row{600, {1178.03,  915.68, 1096.94, 1197.13, 1290.11, 1065.01, 1053.43, 1152.45,  913.64}},
        Row{700, {1195.76,  901.39, 1089.67, 1192.64, 1222.11, 1086.22, 1060.10, 1143.56,  869.39}},
        Row{800, {1178.15,  885.05, 1052.64, 1186.67, 1221.19, 1064.62, 1060.77, 1124.77,  887.45}},
        Row{900, {1159.22,  894.00, 1063.50, 1144.66, 1209.03, 1057.02, 1030.55, 1130.82,  876.66}},
        Row{1000, {1136.11,  859.95, 1057.48, 1162.12, 1221.18, 1045.46, 1031.86, 1139.77,  866.65}},
        Row{1100, {1134.82,  855.98, 1039.32, 1150.63, 1196.74, 1036.91, 1011.14, 1092.54,  847.60}},
        Row{1200, {1125.08,  853.71, 1027.36, 1150.37, 1184.81, 1116.76, 1000.74, 1091.32,  857.09}},
        Row{1300, {1122.16,  848.52, 1026.86, 1138.25, 1190.09, 1036.67,  998.02, 1031.14,  839.81}},
        Row{1400, {1108.69,  847.26, 1026.35, 1128.82, 1168.30, 1012.84,  993.11, 1085.37,  843.50}},
        Row{1500, {1112.17,  834.21, 1024.44, 1122.15, 1187.23, 1010.51,  984.84, 1091.10,  835.27}},
        Row{1600, {1110.37,  844.12, 1014.67, 1120.94, 1146.42, 1003.27,  975.25, 1081.94,  836.34}},
        Row{1700, {1109.82,  828.41, 1014.53, 1115.82, 1147.01, 1003.19,  979.74, 1063.07,  833.20}},
        Row{1800, {1101.68,  828.97, 1012.67, 1104.12, 1149.41, 1002.23,  972.15, 1072.56,  818.65}},
        Row{1900, {1096.33,  828.30, 1001.67, 1103.96, 1140.66,  997.58,  964.76, 1054.42,  840.79}},
        Row{2000, {1094.89,  820.84, 1003.01, 1111.91, 1136.22,  991.03,  964.08, 1050.80,  815.59}},
        Row{2100, {1089.74,  820.97, 1009.28, 1095.90, 1126.76,  996.16,  956.72, 1048.30,  823.50}},
        Row{2200, {1082.87,  822.05, 1000.48, 1091.35, 1124.62,  990.83,  950.61, 1040.21,  819.37}},
        Row{2300, {1080.32,  821.54, 1007.38, 1088.49, 1117.27,  991.53,  951.32, 1034.25,  820.40}},
        Row{2400, {1073.99,  817.52,  991.38, 1086.99, 1116.60,  987.70,  954.10, 1032.01,  815.06}},
        Row{2500, {1078.07,  815.74,  995.41, 1082.10, 1111.49,  983.36,  946.27, 1035.47,  813.21}},
        Row{2600, {1072.01,  813.06,  995.11, 1079.86, 1109.26,  985.46,  940.43, 1031.25,  812.34}},
        Row{2700, {1072.55,  811.71,  988.75, 1075.46, 1107.21,  984.41,  938.71, 1023.39,  807.93}},
        Row{2800, {1070.19,  810.63,  984.02, 1072.56, 1105.46,  985.24,  936.42, 1021.78,  805.09}},
        Row{2900, {1066.63,  809.43,  982.61, 1068.91, 1105.68,  982.66,  934.20, 1019.18,  805.24}},
        Row{3000, {1066.34,  808.84,  981.81, 1068.41, 1103.69,  980.59,  933.41, 1018.71,  804.84}},
    }},
    // finnish
    Table{{
        Row{100, { 986.92,  760.32,  908.37,  975.32, 1081.87,  816.71,  772.17,  741.30,  771.21}},
        Row{200, { 907.49,  712.74,  737.18,  917.34, 1017.94,  728.56,  740.54,  700.87,  714.51}},
        Row{300, { 892.46,  682.02,  741.49,  985.22,  943.43,  729.01,  732.28,  670.92,  677.05}},
        Row{400, { 863.79,  701.72,  739.24,  862.73,  941.56,  720.14,  705.52,  649.29,  662.47}},
        Row{500, { 865.48,  655.28,  709.72,  870.80,  947.48,  653.05,  697.04,  643.86,  669.39}},
        Row{600, { 828.14,  676.48,  705.76,  861.98,  918.98,  689.54,  722.42,  644.97,  662.55}},
        Row{700, { 822.01,  656.18,  690.41,  837.00,  875.74,  677.60,  666.37,  545.45,  641.66}},
        Row{800, { 798.85,  624.97,  676.36,  834.36,  867.88,  668.71,  664.99,  635.46,  621.62}},
        Row{900, { 808.91,  650.67,  662.03,  776.26,  822.15,  642.12,  654.85,  569.60,  621.14}},
        Row{1000, { 795.61,  628.91,  650.72,  782.82,  869.46,  634.67,  637.22,  606.84,  614.78}},
        Row{1100, { 769.76,  616.12,  638.27,  779.75,  852.08,  629.36,  653.67,  552.78,  631.76}},
        Row{1200, { 771.50,  606.79,  630.64,  757.71,  842.33,  629.23,  633.09,  587.53,  609.68}},
        Row{1300, { 750.40,  601.33,  621.75,  750.54,  820.57,  627.08,  621.93,  575.41,  600.00}},
        Row{1400, { 739.74,  595.03,  620.90,  749.16,  817.63,  609.30,  620.44,  629.19,  601.82}},
        Row{1500, { 742.70,  591.64,  619.46,  739.85,  817.20,  599.62,  613.21,  527.14,  598.25}},
        Row{1600, { 739.78,  588.97,  613.41,  740.21,  818.22,  610.52,  614.27,  562.19,  591.01}},
        Row{1700, { 737.80,  582.10,  611.65,  734.53,  806.75,  605.20,  608.42,  551.30,  587.77}},
        Row{1800, { 728.57,  579.50,  607.60,  731.80,  807.45,  599.77,  608.87,  563.28,  585.70}},
        Row{1900, { 731.94,  580.58,  603.83,  732.94,  802.25,  602.86,  603.77,  545.94,  586.07}},
        Row{2000, { 731.85,  575.85,  601.38,  726.08,  796.24,  599.57,  603.09,  585.29,  585.61}},
        Row{2100, { 725.77,  574.97,  604.40,  725.72,  791.12,  600.71,  600.40,  569.04,  583.56}},
        Row{2200, { 718.32,  577.33,  598.28,  720.34,  789.26,  598.06,  596.96,  553.72,  609.25}},
        Row{2300, { 718.85,  574.37,  596.24,  724.10,  787.92,  595.41,  597.19,  565.32,  586.39}},
        Row{2400, { 714.02,  572.04,  596.41,  717.78,  789.57,  590.50,  596.94,  551.83,  574.32}},
        Row{2500, { 712.95,  568.86,  594.72,  718.54,  782.21,  593.98,  593.26,  547.39,  573.57}},
        Row{2600, { 712.79,  569.17,  592.75,  717.16,  779.63,  591.23,  592.79,  547.07,  570.83}},
        Row{2700, { 712.70,  567.69,  591.12,  715.20,  778.44,  589.62,  589.34,  556.90,  580.66}},
        Row{2800, { 708.78,  568.37,  589.68,  712.55,  776.99,  588.85,  588.63,  553.78,  870.30}},
        Row{2900, { 708.60,  568.14,  588.42,  710.54,  776.89,  587.92,  588.38,  553.53,  570.64}},
        Row{3000, { 708.00,  567.82,  588.12,  709.67,  775.51,  587.49,  587.96,  547.54,  567.40}},
    }},
    // french
    Table{{
        Row{100, {1433.85,  873.78, 1057.62, 1174.73, 1298.62, 1194.28, 1144.87, 1096.26,  848.76}},
        Row{200, {1116.92,  810.68, 1018.93, 1101.99, 1127.90, 1116.42, 1091.61, 1003.41,  804.56}},
        Row{300, {1088.12,  799.74,  990.42, 1081.75, 1115.97, 1079.39, 1093.96,  990.77,  810.21}},
        Row{400, {1057.77,  775.46,  987.97, 1060.23, 1126.76, 1074.54, 1061.31,  941.75,  783.61}},
        Row{500, {1065.64,  764.39,  954.00, 1043.14, 1071.31, 1036.29, 1047.05,  964.34,  779.60}},
        Row{600, {1054.67,  765.50,  947.15, 1014.21, 1070.12, 1018.79, 1022.27,  925.37,  789.04}},
        Row{700, {1023.80,  750.09,  946.51,  990.76, 1052.28, 1007.11,  982.37,  922.21,  737.17}},
        Row{800, { 984.90,  735.05,  923.04,  988.62, 1049.89,  993.70, 1018.88,  917.88,  754.35}},
        Row{900, { 997.89,  736.86,  925.97,  985.26, 1022.86,  983.76,  998.75,  913.68,  757.99}},
        Row{1000, {1030.32,  735.34,  900.88,  982.35, 1030.92,  992.57,  963.16,  886.37,  740.29}},
        Row{1100, { 983.86,  733.54,  889.56,  984.50,  996.03,  979.98,  978.54,  909.46,  727.56}},
        Row{1200, { 968.71,  725.49,  886.47,  977.21, 1000.24,  961.75,  973.23,  882.32,  722.57}},
        Row{1300, { 951.85,  711.83,  882.01,  951.41,  993.60,  951.86,  955.18,  884.12,  722.68}},
        Row{1400, { 963.58,  700.59,  888.99,  967.40, 1005.08,  950.66,  953.50,  868.80,  703.32}},
        Row{1500, { 969.16,  703.55,  879.73,  953.11,  971.72,  939.56,  948.64,  874.03,  701.49}},
        Row{1600, { 969.45,  713.02,  875.00,  944.24,  968.43,  939.71,  936.50,  865.42,  715.52}},
        Row{1700, { 954.71,  700.48,  887.62,  942.18,  954.87,  930.35,  928.29,  860.46,  698.44}},
        Row{1800, { 949.84,  697.77,  847.22,  948.38,  957.54,  922.86,  930.21,  860.07,  690.85}},
        Row{1900, { 944.31,  695.55,  861.80,  936.89,  952.97,  922.77,  922.97,  855.45,  688.54}},
        Row{2000, { 942.66,  690.92,  849.25,  924.79,  949.14,  919.94,  919.41,  849.15,  692.81}},
        Row{2100, { 936.46,  684.70,  841.97,  924.14,  936.54,  926.01,  920.15,  847.54,  689.12}},
        Row{2200, { 936.09,  685.03,  842.79,  920.60,  940.77,  922.34,  918.29,  846.96,  687.46}},
        Row{2300, { 932.64,  682.53,  846.33,  919.18,  935.04,  918.79,  912.82,  843.93,  683.47}},
        Row{2400, { 925.86,  681.76,  843.23,  920.91,  932.00,  914.95,  910.38,  837.50,  685.04}},
        Row{2500, { 921.28,  681.63,  843.33,  918.20,  929.50,  911.29,  910.48,  836.76,  683.58}},
        Row{2600, { 919.73,  680.65,  840.63,  914.71,  928.95,  910.31,  907.76,  833.24,  682.17}},
        Row{2700, { 916.53,  677.12,  833.45,  913.08,  927.44,  905.06,  902.87,  835.10,  679.95}},
        Row{2800, { 916.68,  674.72,  834.43,  910.15,  928.29,  901.53,  902.44,  833.15,  679.22}},
        Row{2900, { 915.66,  673.60,  833.43,  906.72,  927.90,  898.81,  899.43,  833.27,  678.12}},
        Row{3000, { 915.58,  672.86,  832.60,  906.49,  925.84,  897.99,  899.26,  832.49,  677.30}},
    }},
    // german
    Table{{
        Row{100, { 949.51,  826.59,  843.10,  964.04, 1032.79,  831.84,  884.49, 1029.36,  816.50}},
        Row{200, { 930.73,  791.96,  798.28,  899.84,  936.87,  810.08,  808.67,  975.89,  787.07}},
        Row{300, { 866.57,  777.06,  783.60,  874.79,  917.36,  774.05,  775.83,  946.05,  771.09}},
        Row{400, { 914.95,  749.94,  754.82,  848.89,  875.26,  774.21,  773.74,  910.46,  750.35}},
        Row{500, { 878.78,  730.47,  764.23,  869.79,  843.38,  747.21,  798.21,  911.35,  727.08}},
        Row{600, { 853.55,  708.60,  752.91,  831.67,  875.55,  778.90,  744.23,  873.98,  710.30}},
        Row{700, { 840.01,  708.17,  733.48,  828.64,  864.65,  745.24,  753.57,  873.65,  704.57}},
        Row{800, { 835.36,  718.14,  745.33,  823.87,  825.98,  709.89,  735.96,  860.58,  716.12}},
        Row{900, { 831.98,  704.88,  728.50,  808.98,  839.18,  731.55,  727.06,  892.28,  700.76}},
        Row{1000, { 830.05,  733.23,  717.67,  801.95,  821.93,  710.78,  722.93,  851.85,  694.51}},
        Row{1100, { 813.00,  699.69,  712.36,  803.02,  811.73,  702.46,  718.35,  828.51,  691.20}},
        Row{1200, { 800.33,  683.37,  696.65,  788.16,  801.91,  702.32,  702.99,  820.05,  691.64}},
        Row{1300, { 789.68,  680.36,  695.77,  791.30,  805.26,  694.90,  700.46,  816.64,  686.62}},
        Row{1400, { 792.32,  670.57,  690.28,  781.93,  797.27,  692.81,  712.21,  814.30,  683.37}},
        Row{1500, { 779.66,  669.51,  682.83,  781.45,  786.02,  686.44,  690.25,  804.03,  672.50}},
        Row{1600, { 780.70,  667.75,  683.62,  772.27,  782.81,  684.57,  687.49,  800.52,  673.52}},
        Row{1700, { 771.01,  663.24,  677.34,  769.20,  778.07,  684.34,  687.12,  801.23,  670.46}},
        Row{1800, { 760.00,  664.35,  676.43,  764.58,  779.41,  683.39,  682.97,  789.67,  669.03}},
        Row{1900, { 757.48,  663.11,  678.27,  769.17,  772.49,  679.53,  676.01,  783.69,  661.90}},
        Row{2000, { 759.92,  658.28,  669.97,  756.32,  770.07,  671.52,  673.66,  787.83,  657.35}},
        Row{2100, { 759.17,  653.61,  665.88,  754.89,  765.37,  666.28,  674.57,  784.66,  656.30}},
        Row{2200, { 754.22,  653.91,  666.28,  749.77,  762.34,  669.69,  671.34,  777.37,  654.40}},
        Row{2300, { 753.02,  648.72,  666.13,  747.05,  758.53,  666.32,  666.93,  775.62,  652.74}},
        Row{2400, { 746.64,  648.19,  663.13,  744.31,  760.71,  663.94,  667.99,  771.10,  650.50}},
        Row{2500, { 745.64,  647.29,  659.88,  745.31,  754.63,  662.02,  664.06,  770.31,  645.16}},
        Row{2600, { 743.37,  645.79,  656.24,  743.22,  755.16,  661.47,  664.05,  767.65,  642.62}},
        Row{2700, { 744.37,  643.66,  655.44,  741.13,  752.82,  657.73,  662.18,  769.20,  640.84}},
        Row{2800, { 742.61,  641.61,  654.69,  739.98,  751.24,  656.53,  661.47,  766.68,  638.07}},
        Row{2900, { 741.46,  641.54,  654.13,  739.28,  749.94,  656.12,  660.15,  765.37,  638.07}},
        Row{3000, { 740.93,  641.33,  653.76,  738.97,  748.76,  655.79,  659.76,  764.73,  637.83}},
    }},
    // greek
    Table{{
        Row{100, {1259.87, 1070.68, 1121.58, 1247.14, 1322.48, 1105.16, 1099.43, 1159.71, 1044.09}},
        Row{200, {1217.85, 1009.45, 1146.57, 1251.26, 1258.05, 1086.95, 1055.14, 1110.65, 1066.57}},
        Row{300, {1182.19, 1074.73, 1060.10, 1144.21, 1206.61, 1046.74, 1054.68, 1114.84, 1008.21}},
        Row{400, {1124.91, 1016.34, 1036.34, 1152.39, 1220.39, 1030.47, 1011.91, 1089.08,  982.81}},
        Row{500, {1125.14,  961.32, 1025.47, 1146.47, 1165.40, 1007.51, 1072.44, 1041.93,  993.72}},
        Row{600, {1088.32,  985.55, 1020.68, 1133.31, 1131.46, 1008.23, 1034.22, 1051.95,  950.52}},
        Row{700, {1081.34,  907.12,  970.30, 1115.77, 1128.55, 1026.35,  992.63, 1033.78,  911.48}},
        Row{800, {1054.53,  928.03,  965.54, 1050.76, 1105.82,  985.43,  996.55, 1001.25,  917.94}},
        Row{900, {1049.57,  895.61,  948.67, 1110.06, 1075.01,  944.49,  967.08, 1000.22,  891.24}},
        Row{1000, {1050.36,  888.02,  976.75, 1107.66, 1088.10,  936.78,  946.86,  967.50,  884.33}},
        Row{1100, {1026.87,  866.55,  934.61, 1018.36, 1051.28,  923.44,  958.07,  969.79,  877.19}},
        Row{1200, {1034.26,  861.84,  932.44, 1027.07, 1043.47,  925.72,  922.33,  955.48,  867.70}},
        Row{1300, {1019.03,  855.19,  912.40, 1029.37, 1038.52,  916.27,  927.57,  939.96,  854.07}},
        Row{1400, {1021.95,  850.14,  920.78, 1001.33, 1037.52,  913.95,  909.47,  930.84,  854.99}},
        Row{1500, {1002.97,  848.63,  902.94,  986.47, 1031.88,  911.17,  900.75,  934.42,  851.96}},
        Row{1600, { 993.40,  837.25,  897.34,  992.33, 1017.88,  909.67,  900.98,  923.06,  851.97}},
        Row{1700, { 991.82,  839.11,  896.35,  981.96, 1018.57,  910.12,  893.84,  928.77,  840.03}},
        Row{1800, { 984.64,  832.02,  892.77,  983.88, 1013.80,  903.01,  893.12,  925.64,  834.73}},
        Row{1900, { 978.87,  833.06,  886.37,  976.19, 1008.14,  901.83,  885.14,  919.07,  834.68}},
        Row{2000, { 978.95,  827.13,  877.66,  975.06, 1001.78,  890.79,  884.19,  915.43,  837.97}},
        Row{2100, { 972.25,  827.89,  873.05,  969.79, 1002.51,  883.46,  883.76,  909.22,  830.92}},
        Row{2200, { 973.78,  821.85,  875.12,  964.35,  994.99,  881.14,  880.74,  906.41,  827.78}},
        Row{2300, { 970.08,  820.82,  880.17,  971.26,  990.63,  879.51,  876.95,  904.34,  824.39}},
        Row{2400, { 969.23,  820.23,  869.45,  963.95,  984.43,  876.80,  874.75,  901.43,  825.35}},
        Row{2500, { 966.36,  817.15,  867.74,  961.96,  985.88,  877.56,  869.55,  898.86,  822.69}},
        Row{2600, { 964.02,  814.98,  868.52,  961.91,  983.91,  873.24,  867.24,  895.98,  820.68}},
        Row{2700, { 960.91,  813.43,  864.25,  962.43,  981.36,  872.98,  865.12,  893.10,  818.95}},
        Row{2800, { 958.56,  812.54,  861.96,  959.33,  979.29,  869.76,  862.12,  892.82,  817.24}},
        Row{2900, { 957.09,  812.23,  860.36,  959.30,  979.42,  868.49,  859.81,  891.54,  815.41}},
        Row{3000, { 956.75,  810.99,  859.45,  958.26,  977.47,  868.16,  858.85,  891.12,  814.71}},
    }},
    // hebrew
    Table{{
        Row{100, {1167.63,  844.11, 1065.86, 1182.98, 1174.89, 1004.81, 1014.57, 1171.83,  859.16}},
        Row{200, {1132.84,  794.41, 1003.53, 1179.35, 1118.89,  939.98,  930.82, 1156.15,  796.62}},
        Row{300, {1109.40,  770.85,  959.54, 1039.40, 1080.68,  905.12,  895.81, 1114.02,  757.03}},
        Row{400, {1072.76,  749.02,  954.70, 1023.05, 1020.98,  889.19,  873.82, 1074.91,  757.42}},
        Row{500, {1045.18,  722.79,  971.44, 1028.32, 1038.45,  881.98,  864.82, 1041.01,  762.40}},
        Row{600, {1023.43,  710.85,  927.86, 1033.67, 1046.21,  872.51,  879.62, 1037.20,  728.44}},
        Row{700, {1003.01,  710.96,  904.26, 1013.08,  984.92,  852.03,  855.60,  990.44,  737.80}},
        Row{800, { 976.28,  703.24,  905.81,  981.40,  992.49,  826.46,  851.54, 1001.41,  721.74}},
        Row{900, { 976.93,  696.16,  889.93,  987.08,  970.17,  858.16,  827.65,  978.03,  718.40}},
        Row{1000, { 940.77,  697.80,  875.47,  957.10,  959.65,  815.98,  833.56,  987.95,  700.31}},
        Row{1100, { 955.88,  708.01,  881.01,  954.13,  959.14,  823.12,  828.58,  992.76,  706.15}},
        Row{1200, { 945.39,  692.47,  874.69,  964.84,  954.72,  826.73,  826.67,  951.05,  701.61}},
        Row{1300, { 957.62,  685.29,  846.72,  947.99,  957.12,  807.57,  814.69,  949.97,  687.69}},
        Row{1400, { 945.57,  681.47,  865.06,  951.56,  946.28,  803.36,  804.74,  947.98,  686.46}},
        Row{1500, { 942.60,  678.26,  841.11,  932.13,  940.38,  800.73,  790.48,  954.71,  682.96}},
        Row{1600, { 933.40,  676.03,  850.62,  924.80,  935.90,  799.16,  789.74,  952.26,  676.04}},
        Row{1700, { 931.65,  673.62,  840.74,  913.76,  931.48,  795.55,  789.19,  939.28,  673.96}},
        Row{1800, { 927.99,  676.50,  836.31,  921.10,  922.20,  791.00,  787.54,  922.98,  678.26}},
        Row{1900, { 912.54,  670.34,  846.27,  909.99,  919.45,  788.94,  787.73,  927.76,  670.99}},
        Row{2000, { 917.06,  668.31,  836.35,  907.08,  914.51,  780.88,  783.84,  923.24,  662.58}},
        Row{2100, { 911.28,  664.50,  830.70,  906.42,  910.90,  778.93,  783.29,  917.10,  659.71}},
        Row{2200, { 908.53,  661.96,  824.31,  903.73,  904.52,  777.37,  778.34,  913.86,  657.02}},
        Row{2300, { 906.80,  661.86,  820.45,  900.99,  905.39,  778.58,  774.93,  919.08,  656.90}},
        Row{2400, { 905.64,  659.68,  820.68,  898.65,  907.64,  774.26,  772.58,  908.49,  653.81}},
        Row{2500, { 902.94,  659.61,  818.53,  897.54,  899.13,  770.97,  772.29,  907.72,  656.66}},
        Row{2600, { 902.80,  657.47,  814.31,  896.52,  897.53,  771.77,  771.64,  904.33,  652.15}},
        Row{2700, { 899.03,  658.12,  812.95,  896.22,  896.52,  770.29,  769.44,  904.72,  653.54}},
        Row{2800, { 898.86,  657.59,  810.81,  894.58,  895.54,  767.87,  766.57,  904.09,  652.62}},
        Row{2900, { 896.09,  656.54,  808.62,  892.88,  893.24,  765.71,  765.82,  903.00,  651.97}},
        Row{3000, { 895.42,  656.02,  807.66,  891.95,  893.03,  765.59,  765.58,  901.85,  651.70}},
    }},
    // italian
    Table{{
        Row{100, {1608.03, 1281.92, 1505.28, 1663.93, 1678.99, 1512.58, 1453.40, 1497.25, 1256.25}},
        Row{200, {1530.35, 1220.35, 1505.65, 1539.21, 1634.48, 1466.04, 1335.95, 1423.08, 1235.00}},
        Row{300, {1483.55, 1130.40, 1377.49, 1544.03, 1538.44, 1458.35, 1287.34, 1388.67, 1127.56}},
        Row{400, {1456.08, 1172.23, 1345.80, 1483.82, 1497.51, 1358.90, 1326.03, 1404.19, 1165.00}},
        Row{500, {1411.82, 1134.56, 1287.68, 1434.97, 1498.61, 1301.76, 1233.24, 1326.07, 1070.82}},
        Row{600, {1422.27, 1097.09, 1326.37, 1460.48, 1469.33, 1297.14, 1228.77, 1344.66, 1099.74}},
        Row{700, {1403.02, 1109.34, 1251.74, 1404.33, 1425.44, 1285.90, 1207.12, 1299.08, 1071.82}},
        Row{800, {1384.18, 1068.08, 1265.15, 1361.90, 1415.84, 1290.37, 1182.20, 1288.58, 1056.29}},
        Row{900, {1358.17, 1040.18, 1277.34, 1356.87, 1374.20, 1276.21, 1149.84, 1291.85, 1037.86}},
        Row{1000, {1315.82, 1026.33, 1219.11, 1329.39, 1378.41, 1231.43, 1157.54, 1241.90, 1062.28}},
        Row{1100, {1313.81, 1047.82, 1213.37, 1311.69, 1353.68, 1254.60, 1149.48, 1233.81, 1049.44}},
        Row{1200, {1319.76, 1021.37, 1200.57, 1327.82, 1357.58, 1232.52, 1153.15, 1238.07, 1025.45}},
        Row{1300, {1330.26, 1013.06, 1196.55, 1286.89, 1327.36, 1236.27, 1135.26, 1243.08, 1019.55}},
        Row{1400, {1309.42, 1007.62, 1187.15, 1292.85, 1314.11, 1203.36, 1118.76, 1225.68, 1002.73}},
        Row{1500, {1304.06, 1010.80, 1191.29, 1288.34, 1310.32, 1191.95, 1176.53, 1214.42,  994.57}},
        Row{1600, {1294.08, 1016.14, 1184.91, 1280.47, 1298.09, 1180.09, 1120.64, 1196.62,  993.86}},
        Row{1700, {1295.96,  988.88, 1179.23, 1268.73, 1295.82, 1188.49, 1115.97, 1207.90,  989.11}},
        Row{1800, {1283.14,  986.95, 1173.25, 1267.81, 1286.09, 1178.10, 1117.93, 1196.46,  971.77}},
        Row{1900, {1273.44,  978.82, 1158.53, 1264.40, 1274.09, 1187.95, 1103.24, 1186.65,  976.57}},
        Row{2000, {1263.06,  981.90, 1163.62, 1259.76, 1278.53, 1160.50, 1112.16, 1173.54,  975.56}},
        Row{2100, {1267.52,  970.36, 1154.40, 1254.76, 1278.53, 1155.06, 1105.76, 1175.63,  966.15}},
        Row{2200, {1259.13,  962.74, 1153.53, 1252.35, 1271.66, 1151.64, 1093.33, 1174.71,  964.22}},
        Row{2300, {1258.24,  963.60, 1157.87, 1242.94, 1266.34, 1161.62, 1087.51, 1175.28,  958.86}},
        Row{2400, {1245.79,  960.04, 1150.97, 1243.58, 1265.33, 1147.22, 1084.92, 1167.73,  958.92}},
        Row{2500, {1243.62,  956.78, 1146.40, 1241.73, 1250.03, 1143.94, 1087.08, 1162.48,  956.09}},
        Row{2600, {1243.66,  954.51, 1147.23, 1237.54, 1248.87, 1138.07, 1079.38, 1159.15,  959.20}},
        Row{2700, {1242.35,  952.45, 1142.16, 1232.35, 1246.70, 1136.07, 1080.39, 1159.69,  959.36}},
        Row{2800, {1242.43,  950.66, 1142.86, 1233.18, 1244.65, 1133.75, 1076.71, 1158.48,  951.38}},
        Row{2900, {1240.92,  947.75, 1139.25, 1231.25, 1243.65, 1133.08, 1073.72, 1157.39,  950.50}},
        Row{3000, {1239.48,  946.81, 1139.21, 1229.82, 1241.30, 1133.12, 1072.78, 1155.72,  949.30}},
    }},
    // russian
    Table{{
        Row{100, {2102.22, 1505.12, 1695.51, 2113.62, 2200.35, 1689.86, 1551.73, 1786.71, 1462.54}},
        Row{200, {1924.87, 1449.64, 1626.16, 1938.55, 2069.85, 1567.39, 1473.83, 1632.57, 1386.19}},
        Row{300, {1859.02, 1316.70, 1540.64, 1911.04, 1942.72, 1552.71, 1433.17, 1658.64, 1361.11}},
        Row{400, {1801.22, 1336.32, 1513.85, 1905.26, 1895.01, 1538.31, 1436.95, 1594.95, 1330.29}},
        Row{500, {1791.42, 1262.24, 1460.38, 1774.65, 1797.47, 1558.95, 1386.24, 1459.91, 1317.96}},
        Row{600, {1744.24, 1244.96, 1406.99, 1769.37, 1800.13, 1448.04, 1337.74, 1480.96, 1332.11}},
        Row{700, {1686.40, 1231.77, 1394.68, 1754.98, 1723.48, 1376.01, 1276.81, 1505.85, 1234.72}},
        Row{800, {1654.77, 1261.47, 1339.31, 1670.02, 1786.48, 1371.58, 1279.17, 1432.13, 1214.23}},
        Row{900, {1649.80, 1211.70, 1348.24, 1637.57, 1702.65, 1384.26, 1251.74, 1440.06, 1232.63}},
        Row{1000, {1617.94, 1198.53, 1333.23, 1608.56, 1719.74, 1375.45, 1249.83, 1422.27, 1206.52}},
        Row{1100, {1632.53, 1220.10, 1326.94, 1575.40, 1704.00, 1349.83, 1219.64, 1414.47, 1203.29}},
        Row{1200, {1598.73, 1186.36, 1308.16, 1578.31, 1663.46, 1309.28, 1214.46, 1380.32, 1188.17}},
        Row{1300, {1545.87, 1170.11, 1313.94, 1560.27, 1640.56, 1287.36, 1212.65, 1341.94, 1182.52}},
        Row{1400, {1550.01, 1169.34, 1304.05, 1545.75, 1642.17, 1285.53, 1191.31, 1348.43, 1171.53}},
        Row{1500, {1544.08, 1161.14, 1280.28, 1523.50, 1628.61, 1272.48, 1184.36, 1330.81, 1162.40}},
        Row{1600, {1511.46, 1163.99, 1260.53, 1502.79, 1615.31, 1286.30, 1172.10, 1312.93, 1153.97}},
        Row{1700, {1513.51, 1154.20, 1254.32, 1522.46, 1611.09, 1268.17, 1172.75, 1296.71, 1153.00}},
        Row{1800, {1500.58, 1147.47, 1256.29, 1490.29, 1594.05, 1261.83, 1169.20, 1300.84, 1150.48}},
        Row{1900, {1499.26, 1137.74, 1251.74, 1488.47, 1584.06, 1243.29, 1158.62, 1296.32, 1145.55}},
        Row{2000, {1497.86, 1135.58, 1240.49, 1487.72, 1587.03, 1241.10, 1157.83, 1295.27, 1137.60}},
        Row{2100, {1498.09, 1133.19, 1236.12, 1493.40, 1576.08, 1242.08, 1150.86, 1300.02, 1135.92}},
        Row{2200, {1488.84, 1125.36, 1241.11, 1485.27, 1568.48, 1236.94, 1146.17, 1289.84, 1128.11}},
        Row{2300, {1477.82, 1123.57, 1231.76, 1481.32, 1562.59, 1228.66, 1144.22, 1284.07, 1121.92}},
        Row{2400, {1470.61, 1120.23, 1226.46, 1481.05, 1554.59, 1225.96, 1142.26, 1272.54, 1119.00}},
        Row{2500, {1466.72, 1119.22, 1224.64, 1479.43, 1549.08, 1225.67, 1140.66, 1270.68, 1119.62}},
        Row{2600, {1464.03, 1117.19, 1225.35, 1477.86, 1547.74, 1225.10, 1138.07, 1267.95, 1115.73}},
        Row{2700, {1460.14, 1114.92, 1221.96, 1474.97, 1540.40, 1227.64, 1137.38, 1264.89, 1113.39}},
        Row{2800, {1457.37, 1113.04, 1219.38, 1468.88, 1535.92, 1221.90, 1134.34, 1262.84, 1111.89}},
        Row{2900, {1455.52, 1108.83, 1220.00, 1467.61, 1532.35, 1221.48, 1131.99, 1262.59, 1109.85}},
        Row{3000, {1453.33, 1107.71, 1219.06, 1466.96, 1531.19, 1218.42, 1131.66, 1260.97, 1109.27}},
    }},
}};
// clang-format on

inline LearningCurve curve(std::size_t language, std::size_t variant) {
  std::vector<CurvePoint> points;
  points.reserve(kNumCheckpoints);
  for (const auto& row : kTables.at(language)) {
    points.push_back({row.step, row.perplexity.at(variant)});
  }
  return {std::string(kLanguages[language]),
          variant_from_name(kFixtureVariants[variant]), std::move(points)};
}

// All 81 embedded curves.
inline CurveSet curves() {
  CurveSet set;
  for (std::size_t l = 0; l < kNumLanguages; ++l) {
    for (std::size_t v = 0; v < kNumVariants; ++v) set.add(curve(l, v));
  }
  return set;
}

}  // namespace implang::fixtures
