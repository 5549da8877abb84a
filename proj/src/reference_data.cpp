#include "shms/reference_data.hpp"

#include <limits>
#include <stdexcept>

namespace shms::reference {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}  // namespace

const std::vector<std::string>& algorithms() {
    static const std::vector<std::string> names = {"AVOA", "PSO", "GWO", "FFA", "WOA", "TLBO", "MFO", "BBO", "DE", "SSA", "GSA", "IPO", "SHMS"};
    return names;
}

const std::vector<MeanTable>& mean_tables() {
    static const std::vector<MeanTable> tables = {
        {30,
         {"F1", "F2", "F3", "F4", "F5", "F6", "F7", "F8", "F9", "F10", "F11", "F12", "F13"},
         {
          {2.01e-199, 2370.0, 2.59e-27, 7.88e-07, 8.04e-71, 1.66e-96, 1660.0, 4.47, 0.000336, 2.07e-07, 0.000288, 4.76e-11, 0.0},
          {8.72e-104, 19.1, 9.02e-17, 3.82e-06, 7.41e-50, 1.89e-49, 29.2, 0.505, 0.00348, 2.39, 0.14, 8.28e-07, 0.0},
          {7.83e-145, 9200.0, 4.02e-05, 5030.0, 41800.0, 3.35e-22, 22300.0, 498.0, 36400.0, 1830.0, 1090.0, 2.41, 0.0},
          {1.03e-103, 21.4, 7.54e-07, 16.4, 49.4, 9.51e-41, 67.7, 1.56, 9.4, 10.6, 7.43, 0.0459, 0.0},
          {0.0065, 515000.0, 27.0, 73.1, 27.6, 27.2, 2690000.0, 224.0, 60.0, 185.0, 83.4, 227.0, 29.0},
          {2.43e-06, 2350.0, 0.734, 0.00426, 0.38, 1.06e-05, 2660.0, 2.36, 0.000265, 9.76e-06, 0.000183, 0.933, 0.0},
          {0.000252, 0.377, 0.00235, 0.0503, 0.00324, 0.00127, 1.33, 0.0162, 0.049, 0.171, 0.0869, 0.0275, 0.00488},
          {-12500.0, -3820.0, -5990.0, -6890.0, -9690.0, -7390.0, -8510.0, -8100.0, -6720.0, -7320.0, -2470.0, -3280.0, 0.0},
          {0.0, 148.0, 2.0, 79.6, 0.0, 20.8, 155.0, 52.2, 157.0, 50.5, 29.2, 16.8, 0.0},
          {8.88e-16, 10.2, 9.7e-14, 0.000344, 4.08e-15, 5.98e-15, 14.0, 0.59, 0.00519, 2.99, 0.0695, 2.3, 4.44e-16},
          {0.0, 21.1, 0.0047, 0.00641, 0.0221, 4.98e-06, 8.37, 1.01, 0.0144, 0.0169, 28.8, 0.011, 0.0},
          {3.79e-07, 274.0, 0.0522, 0.132, 0.0295, 1.25e-06, 180.0, 0.00811, 0.000392, 7.24, 2.01, 0.375, 0.0},
          {1.1e-05, 166000.0, 0.61, 0.0478, 0.538, 0.438, 124.0, 0.123, 0.0016, 18.0, 11.7, 0.121, 2.76},
         },
         {2.5, 11.6923, 5.2308, 7.3077, 5.8462, 3.6923, 11.5385, 7.7692, 7.5385, 8.6154, 8.7692, 7.2308, 3.2692},
         {1, 13, 4, 7, 5, 3, 12, 9, 8, 10, 11, 6, 2}},
        {100,
         {"F1", "F2", "F3", "F4", "F5", "F6", "F7", "F8", "F9", "F10", "F11", "F12", "F13"},
         {
          {1.35e-194, 13800.0, 1.89e-12, 2430.0, 5.62e-71, 1.3e-90, 58400.0, 217.0, 3500.0, 1510.0, 4250.0, 1.01, 0.0},
          {1.66e-104, 89.2, 3.85e-08, 26.5, 6.24e-50, 4.27e-46, 242.0, 10.1, 62.6, 51.3, 18.4, 6.53, 0.0},
          {1.28e-133, 96000.0, 603.0, 214000.0, 1060000.0, 7.9e-10, 234000.0, 50100.0, 476000.0, 51000.0, 15400.0, 4760.0, 0.0},
          {9.17e-102, 30.7, 0.579, 95.3, 82.2, 1.17e-37, 93.6, 20.4, 94.9, 29.2, 19.5, 10.6, 0.0},
          {0.0512, 4750000.0, 97.7, 11700000.0, 97.9, 97.6, 150000000.0, 5310.0, 5340000.0, 131000.0, 115000.0, 10700.0, 29.0},
          {0.000723, 14400.0, 10.0, 2410.0, 4.26, 7.39, 59100.0, 230.0, 3390.0, 1520.0, 4650.0, 127.0, 0.0},
          {0.000183, 7.55, 0.00672, 13.7, 0.00353, 0.00177, 241.0, 0.125, 6.56, 2.75, 4.38, 4.49, 0.0063},
          {-41400.0, -7620.0, -15800.0, -13600.0, -34000.0, -16900.0, -21700.0, -22500.0, -11800.0, -21400.0, -4050.0, -10700.0, -1230.0},
          {0.0, 736.0, 8.83, 892.0, 0.0, 0.0, 864.0, 317.0, 980.0, 235.0, 193.0, 279.0, 0.0},
          {8.88e-16, 11.9, 1.3e-07, 8.68, 4.08e-15, 7.63e-15, 19.9, 3.42, 9.11, 10.1, 4.96, 4.93, 4.44e-16},
          {0.0, 123.0, 0.0053, 22.9, 0.0, 0.0, 533.0, 3.17, 31.3, 13.4, 692.0, 0.822, 0.0},
          {6.55e-06, 121000.0, 0.307, 22600000.0, 0.0534, 0.117, 284000000.0, 4.05, 9180000.0, 32.3, 11.7, 6.92, 0.0},
          {0.000754, 3390000.0, 6.72, 53300000.0, 2.75, 8.09, 571000000.0, 11.3, 16800000.0, 6040.0, 4900.0, 35.9, 10.0},
         },
         {1.8462, 10.6923, 4.8462, 10.4615, 4.3846, 3.5385, 11.7692, 6.4615, 10.7692, 8.2308, 8.6923, 6.8462, 2.4615},
         {1, 11, 5, 10, 4, 3, 13, 6, 12, 8, 9, 7, 2}},
        {500,
         {"F1", "F2", "F3", "F4", "F5", "F6", "F7", "F8", "F9", "F10", "F11", "F12", "F13"},
         {
          {1.04e-200, 98000.0, 0.00157, 525000.0, 2.05e-67, 4.13e-86, 1120000.0, 7150.0, 563000.0, 93300.0, 55700.0, 11300.0, 0.0},
          {3.38e-101, 533.0, 0.0109, 2.36e+116, 3.89e-48, 3.95e-44, 6.04e+118, 229.0, 1500.0, 531.0, 1.08e+269, 181.0, 0.0},
          {2.98e-103, 2290000.0, 357000.0, 5570000.0, 30400000.0, 0.000676, 4800000.0, 1550000.0, 11600000.0, 1240000.0, 1170000.0, 148000.0, 0.0},
          {1.47e-101, 38.2, 64.7, 98.9, 81.9, 8.65e-36, 98.5, 52.7, 98.9, 40.3, 28.7, 20.4, 0.0},
          {3.66, 43100000.0, 494.0, 2300000000.0, 493.0, 495.0, 5020000000.0, 844000.0, 2820000000.0, 37100000.0, 8690000.0, 2850000.0, 29.0},
          {0.059, 96500.0, 91.4, 529000.0, 32.4, 94.2, 1150000.0, 7350.0, 550000.0, 94200.0, 57000.0, 19600.0, 0.0},
          {0.000209, 350.0, 0.052, 15900.0, 0.00465, 0.00167, 38700.0, 496.0, 15500.0, 275.0, 988.0, 2860.0, 0.0102},
          {-212000.0, -17800.0, -58000.0, -27300.0, -169000.0, -39600.0, -62200.0, -70700.0, -25500.0, -60800.0, -11000.0, -30600.0, -2750.0},
          {0.0, 4610.0, 78.8, 6840.0, 0.0, 0.0, 6930.0, 6050.0, 6750.0, 3160.0, 2730.0, 3330.0, 0.0},
          {8.88e-16, 13.0, 0.0019, 19.7, 4.44e-15, 7.87e-15, 20.4, 20.3, 19.5, 14.2, 10.5, 14.1, 4.44e-16},
          {0.0, 941.0, 0.0335, 4710.0, 0.0, 0.0, 10200.0, 3020.0, 5030.0, 846.0, 8610.0, 96.1, 0.0},
          {4.19e-05, 4050000.0, 0.743, 7440000000.0, 0.0859, 0.652, 12000000000.0, 495000000.0, 11300000000.0, 1390000.0, 14600.0, 19.2, 0.0},
          {0.0252, 53400000.0, 51.1, 11300000000.0, 18.0, 49.9, 22100000000.0, 1350000000.0, 14700000000.0, 33200000.0, 3890000.0, 27300.0, 50.0},
         },
         {1.7692, 8.7692, 5.2308, 11.0385, 4.1538, 3.6923, 11.8462, 7.9231, 11.3462, 7.6154, 8.2308, 6.6923, 2.6923},
         {1, 10, 5, 11, 4, 3, 13, 8, 12, 7, 9, 6, 2}},
        {1000,
         {"F1", "F2", "F3", "F4", "F5", "F6", "F7", "F8", "F9", "F10", "F11", "F12", "F13"},
         {
          {1.05e-194, 216000.0, 0.242, 1430000.0, 1.8e-68, 2.44e-85, 2730000.0, 669000.0, 1600000.0, 237000.0, 131000.0, 46000.0, 0.0},
          {6.75e-114, 1e+300, 0.717, 1e+300, 1.93e-48, 1e+300, 1e+300, 1e+300, 1e+300, 1190.0, 3.46e+288, 460.0, 0.0},
          {1.76e-112, 8180000.0, 1670000.0, 21500000.0, 132000000.0, 0.0113, 18500000.0, 9660000.0, 47700000.0, 5920000.0, 6530000.0, 555000.0, 0.0},
          {4.47e-102, 42.3, 79.0, 99.2, 82.3, 2.97e-35, 99.2, 86.0, 99.1, 44.8, 34.0, 23.5, 0.0},
          {5.8, 97800000.0, 1020.0, 8510000000.0, 993.0, 994.0, 12400000000.0, 958000000.0, 14800000000.0, 114000000.0, 24700000.0, 13600000.0, 29.0},
          {0.127, 199000.0, 200.0, 1410000.0, 72.9, 213.0, 2720000.0, 666000.0, 1630000.0, 237000.0, 131000.0, 62400.0, 0.0},
          {0.000285, 1570.0, 0.148, 110000.0, 0.00354, 0.00201, 197000.0, 13400.0, 205000.0, 1690.0, 6430.0, 22000.0, 0.0102},
          {-417000.0, -25800.0, -85800.0, -37200.0, -327000.0, -58700.0, -87200.0, -78000.0, -36400.0, -87200.0, -13400.0, -54700.0, 0.0},
          {0.0, 9660.0, 190.0, 14300.0, 0.0, 0.0, 15200.0, 11700.0, 14100.0, 7570.0, 6690.0, 7790.0, 0.0},
          {8.88e-16, 13.7, 0.0183, 20.0, 3.01e-15, 0.429, 20.5, 20.0, 20.3, 14.6, 11.2, 14.5, 4.44e-16},
          {0.0, 1870.0, 0.0511, 12800.0, 0.0, 3.33e-17, 24600.0, 5860.0, 14500.0, 2070.0, 20500.0, 544.0, 0.0},
          {6.76e-05, 10900000.0, 1.18, 31700000000.0, 0.105, 0.854, 30400000000.0, 887000000.0, 36800000000.0, 11100000.0, 188000.0, 54.7, 0.0},
          {0.0576, 115000000.0, 118.0, 44400000000.0, 36.5, 99.4, 55500000000.0, 2780000000.0, 67000000000.0, 146000000.0, 16000000.0, 638000.0, 100.0},
         },
         {1.7308, 8.0385, 5.0, 10.9615, 4.0385, 4.3077, 11.4231, 9.5385, 11.8077, 7.5769, 7.5385, 6.3846, 2.6538},
         {1, 9, 5, 11, 3, 4, 12, 10, 13, 8, 7, 6, 2}},
        {0,
         {"F14", "F15", "F16", "F17", "F18", "F19", "F20", "F21", "F22", "F23"},
         {
          {1.26, 5.95, 4.06, 1.91, 2.57, 0.998, 2.87, 3.27, 1.39, 1.39, 5.41, 2.61, 12.7},
          {0.000465, 0.0107, 0.00439, 0.00059, 0.000655, 0.00109, 0.00193, 0.00479, 0.00114, 0.00428, 0.00435, 0.00043, 0.00275},
          {-1.03, -1.03, -1.03, -1.03, -1.03, -1.03, -1.03, -1.03, -1.03, -1.03, -1.03, -1.03, -1.03},
          {0.398, 0.462, 0.398, 0.398, 0.398, 0.398, 0.398, 0.477, 0.398, 0.398, 0.398, 0.398, 9.72},
          {3.0, 10.6, 3.0, 3.0, 3.0, 3.0, 3.0, 7.51, 3.0, 3.0, 3.0, 3.0, 8.9},
          {-3.86, -3.8, -3.86, -3.86, -3.85, -3.86, -3.86, -3.86, -3.86, -3.86, -3.86, -3.86, -3.59},
          {-3.31, -2.77, -3.27, -3.3, -3.19, -3.29, -3.22, -3.28, -3.29, -3.23, -3.32, -3.31, -1.82},
          {-10.2, -3.78, -8.15, -9.02, -7.66, -9.26, -5.56, -5.07, -9.4, -6.3, -7.03, -8.07, -1.25},
          {-10.4, -5.04, -10.4, -9.68, -7.79, -8.7, -9.05, -5.96, -9.85, -8.89, -9.79, -9.89, -1.34},
          {-10.5, -4.89, -10.3, -9.81, -6.81, -9.87, -8.68, -5.28, -10.3, -8.53, -9.49, -7.81, -1.35},
         },
         {13.35, 11.6, 6.15, 5.05, 7.7, 5.1, 7.25, 9.65, 4.7, 7.0, 6.45, 5.2, 11.8},
         {13, 11, 5, 4, 9, 2, 8, 10, 1, 7, 6, 3, 12}},
    };
    return tables;
}

const std::vector<DesignColumn>& design_columns() {
    static const std::vector<DesignColumn> cols = {
        {1, "Original", 0.894, 4.83, 0.356, 0.02, 2, 918.0, 0.75, 14925.0, 3812.0, 6251.0, 18381.0, 1573.0, 35789.0, 615.0, 278.6, 51507.0, 21111.0, 12973.0, 64480.0},
        {1, "GA", 0.83, 3.379, 0.5, 0.016, 2, 1567.0, 0.69, 10936.0, 3762.0, 4298.0, 11075.0, 1740.0, 13267.0, 660.0, 262.8, 49259.0, 947.0, 5818.0, 55077.0},
        {1, "PSO", 0.81, 3.115, 0.424, 0.015, 2, 1658.0, 0.67, 10503.0, 3721.0, 4171.0, 12678.0, 1950.8, 20551.0, 713.9, 243.2, 46453.0, 1038.7, 6778.2, 53231.0},
        {1, "ABC", 1.3905, 3.963, 0.4669, 0.0104, 2, 1528.0, 0.36, kNaN, 3818.0, 3043.0, kNaN, 3396.0, 8390.0, 832.0, kNaN, 44559.0, 1014.5, 6233.8, 50793.0},
        {1, "BBO", 0.801, 2.04, 0.5, 0.01, 2, 3587.0, 0.77, 7642.49, 4314.0, 6156.0, 7254.0, 2197.0, 13799.0, 755.0, 229.95, 44536.0, 984.0, 6046.0, 50582.0},
        {1, "ITHS", 0.762, 2.0791, 0.4988, 0.0101, 2, 3454.0, 0.782, 7842.52, 4415.918, 6998.7, 7736.89, 2213.89, 14794.94, 760.594, 228.32, 44301.66, 964.164, 5924.343, 50226.0},
        {1, "I-ITHS", 0.7635, 2.0391, 0.4955, 0.01, 2, 3558.0, 0.7744, 7701.29, 4388.79, 6887.63, 7684.054, 2230.913, 14953.91, 761.578, 228.03, 44259.01, 962.4858, 5914.058, 50173.0},
        {1, "CI", 0.78, 1.9367, 0.5, 0.01, 2, 3734.1233, 0.7381, 7342.7474, 4584.7085, 5862.7287, 7451.3906, 2195.9461, 13608.4472, 764.5084, 227.1607, 44132.519, 955.9112, 5873.6607, 50006.1797},
        {1, "FFA", 0.858, 2.416, 0.402, 0.01575, 2, 1692.0, 0.656, 10286.0, 6228.0, 4246.0, 12625.0, 1991.0, 18788.0, 876.4, 202.3, 39336.0, 1040.0, 6446.0, 45782.0},
        {1, "TLBO", 0.858, 2.416, 0.402, 0.01575, 2, 1692.0, 0.656, 10286.0, 6228.0, 4246.0, 12625.0, 1991.0, 18788.0, 876.4, 202.3, 39336.0, 1040.0, 6446.0, 45782.0},
        {1, "SAMPE-Jaya", 0.7686, 1.4766, 0.4999, 0.01, 2, 3614.0, 0.7624, 7586.57, 3777.88, 5078.37, 7571.34, 2084.05, 10488.39, 719.05, 167.56, 37519.89, 731.71, 4496.08, 42015.98},
        {1, "ARGA", 0.6651, 1.2636, 0.4903, 0.01, 2, 2625.873, 1.0492, 10440.12, 6196.002, 9756.238, 8912.325, 2422.804, 10746.31, 1031.472, 168.2758, 35498.87, 1043.96, 6414.68, 41913.54},
        {1, "SHMS", 0.6447, 1.1121, 0.4166, 0.01, 2, 2451.7768, 1.1237, 11181.4577, 6545.544, 10349.6306, 10819.8036, 2695.5285, 15447.1357, 1090.5668, 159.1575, 34139.5254, 1233.4685, 7579.1304, 41718.6558},
        {2, "Original", 0.539, 4.88, 0.127, 0.025, 4, 158.0, 1.44, 8227.0, 619.0, 49245.0, 25281.0, 920.0, 24909.0, 317.0, 61.5, 19007.0, 1304.0, 8012.0, 27020.0},
        {2, "GA", 0.63, 2.153, 0.12, 0.02, 4, 391.0, 0.87, 4068.0, 1168.0, 14009.0, 18327.0, 1034.0, 15717.0, 376.0, 52.9, 17599.0, 440.0, 2704.0, 20303.0},
        {2, "PSO", 0.59, 1.56, 0.1112, 0.015, 2, 646.0, 0.93, 3283.0, 1205.0, 16926.0, 15844.0, 1288.0, 21745.0, 409.3, 47.5, 16707.0, 523.3, 3215.6, 19922.6},
        {2, "ABC", 0.3293, 3.6468, 0.0924, 0.0105, 2, 511.0, 0.43, kNaN, 2186.0, 1696.0, kNaN, 868.0, 10667.0, 323.0, 61.566, 19014.0, 197.139, 1211.3, 20225.0},
        {2, "BBO", 0.74, 1.199, 0.1066, 0.015, 2, 1061.0, 0.69, 2298.0, 1251.0, 5109.0, 13689.0, 1278.0, 15275.0, 317.75, 60.35, 18799.0, 164.414, 1010.25, 19810.0},
        {2, "ITHS", 0.32079, 5.15184, 0.24725, 0.01204, 1, 301.0, 0.8615, 2306.77, 1398.85, 10502.45, 10345.29, 1248.86, 14414.26, 326.071, 58.641, 18536.55, 272.576, 1674.86, 20211.0},
        {2, "I-ITHS", 0.31619, 5.06235, 0.24147, 0.01171, 1, 309.0, 0.8871, 2303.46, 1435.68, 11165.45, 10456.39, 1290.789, 15820.74, 331.358, 57.705, 18383.46, 292.7937, 1799.09, 20182.0},
        {2, "CI", 0.458, 1.3833, 0.125, 0.01, 2, 1152.888, 0.6522, 1450.0174, 1639.2213, 5382.9311, 8568.0357, 2062.1966, 36090.0964, 381.6827, 50.09702, 17129.8543, 352.885, 2163.3257, 19298.18},
        {2, "FFA", 0.7276, 1.64, 0.1054, 0.01575, 0, 924.0, 0.677, 2408.0, 1262.0, 9374.0, 14448.0, 1156.0, 12768.0, 347.6, 56.6, 18202.0, 210.2, 1231.0, 19433.0},
        {2, "ARGA", 0.400009, 0.710016, 0.154626, 0.011441, 2, 635.2294, 0.904129, 2299.998, 1174.574, 5179.414, 9073.644, 1857.576, 9708.001, 336.1286, 56.84084, 18241.79, 155.71, 956.79, 19198.58},
        {2, "SHMS", 0.4, 0.69, 0.1526, 0.0114, 2, 635.2587, 0.9041, 2299.991, 1208.723, 5091.273, 9188.785, 1870.585, 9780.794, 339.9925, 56.1948, 18135.82, 154.3616, 948.485, 19084.31},
        {3, "Original", 0.387, 4.88, 0.305, 0.019, 2, 160.0, 1.76, 36409.0, 6558.0, 62812.0, 16200.0, 5735.0, 67684.0, 1471.0, 46.6, 16549.0, 4466.0, 27440.0, 43989.0},
        {3, "GA", 0.62, 1.548, 0.44, 0.016, 2, 803.0, 0.68, 9487.0, 6043.0, 3673.0, 8039.0, 3476.0, 4365.0, 1121.0, 62.5, 19163.0, 272.0, 1671.0, 20834.0},
        {3, "PSO", 0.0181, 1.45, 0.423, 0.0145, 2, 894.0, 0.74, 9424.0, 5618.0, 4474.0, 4814.0, 4088.3, 4271.0, 1177.0, 59.2, 18614.0, 276.0, 1696.0, 20310.0},
        {3, "ABC", 1.0024, 2.4, 0.354, 0.103, 2, 704.0, 0.36, kNaN, 4438.0, 2046.0, kNaN, 5608.0, 27166.0, 1187.0, 54.72, 17893.0, 257.82, 1584.2, 19478.0},
        {3, "BBO", 0.55798, 1.133, 0.5, 0.01, 2, 1565.0, 0.898, 7804.0, 9180.0, 4176.0, 3515.0, 4911.0, 5917.0, 1384.0, 55.73, 18059.0, 203.68, 1251.5, 19310.0},
        {3, "ITHS", 0.5726, 0.9737, 0.4974, 0.0101, 2, 1845.0, 0.747, 6552.0, 5441.0, 3869.0, 3473.0, 4832.0, 4995.0, 1220.0, 57.3, 18273.0, 231.0, 1419.0, 19693.0},
        {3, "I-ITHS", 0.5671, 0.9761, 0.4989, 0.01, 2, 1846.0, 0.761, 6614.0, 5536.0, 4049.0, 3461.0, 4871.0, 5062.0, 1229.0, 56.64, 18209.0, 238.0, 1464.0, 19674.0},
        {3, "CI", 0.5235, 1.1943, 0.5, 0.01, 2, 1548.6665, 0.9083, 7889.7151, 4901.7267, 6200.0472, 3746.028, 5078.1022, 6585.2425, 1198.4141, 58.0975, 18447.6373, 383.4699, 2356.2566, 20803.894},
        {3, "TLBO", 0.5524, 0.9854, 0.464, 0.01, 0, 1743.0, 0.80695, 7009.98, kNaN, 4416.42, 3830.527, 5374.56, 6412.95, 1274.73, 53.9355, 17764.3, 278.455, 1710.988, 19475.297},
        {3, "SAMPE-Jaya", 0.5671, 0.9569, 0.499, 0.01, 0, 1841.0, 0.76399, 6636.82, kNaN, 3926.01, 3467.839, 5088.428, 4928.072, 1242.84, 55.318, 17991.96, 231.53, 1422.69, 19414.65},
        {3, "ARGA", 0.460204468, 0.793852708, 0.460204468, 0.011981248, 2, 781.7678209, 1.25317137, 13043.08036, 6290.111612, 7719.023019, 5547.544747, 5267.295773, 5024.067328, 1296.89011, 59.48776644, 18674.91, 346.19, 2127.18, 20802.09},
        {3, "SHMS", 0.4702, 0.7054, 0.5104, 0.01, 2, 1222.003, 1.1508, 9997.415, 6170.574, 6975.842, 4085.168, 5333.346, 4016.238, 1294.375, 59.6033, 18693.796, 333.7221, 2050.5779, 20744.3639},
    };
    return cols;
}

const std::vector<ClosenessEntry>& closeness_entries() {
    static const std::vector<ClosenessEntry> rows = {
        {1, "Original Study", 64480, 35.2998, true}, {1, "GA", 55077, 24.2539, true},
        {1, "PSO", 53231.1, 21.6272, true},          {1, "ABC", 50793, 17.8653, true},
        {1, "BBO", 50582, 17.5227, true},            {1, "ITHS", 50226, 16.9381, true},
        {1, "I-ITHS", 50173, 16.8503, true},         {1, "FFA", 45783, 8.8774, true},
        {1, "CI", 50006.18, 16.5729, true},          {1, "TLBO", 45782, 8.8754, true},
        {1, "SAMPE-Jaya", 42015.98, 0.7076, true},   {1, "ARGA", 41913.54, 0.4649, true},
        {2, "Original Study", 27020, 29.3697, true}, {2, "GA", 20303, 6.0025, true},
        {2, "PSO", 19922.6, 4.2077, true},           {2, "ABC", 20225, 5.6400, true},
        {2, "BBO", 19810, 3.6632, true},             {2, "ITHS", 20211, 5.5746, true},
        {2, "I-ITHS", 20182, 5.4389, true},          {2, "FFA", 19433, 1.7943, true},
        {2, "CI", 19298.18, 1.1082, true},           {2, "ARGA", 19198.58, 0.5952, true},
        {3, "Original Study", 43989, 52.8419, true}, {3, "GA", 20834, 0.4302, true},
        {3, "PSO", 20310, 2.1386, false},            {3, "ABC", 19478, 6.5015, false},
        {3, "BBO", 19310, 7.4280, false},            {3, "ITHS", 19693, 5.3387, false},
        {3, "I-ITHS", 19674, 5.4405, false},         {3, "CI", 20803.89, 0.2861, true},
        {3, "TLBO", 19475.297, 6.5162, false},       {3, "SAMPE-Jaya", 19414.65, 6.8490, false},
        {3, "ARGA", 20802.09, 0.2775, true},
    };
    return rows;
}

const std::vector<CampaignRow>& campaign_rows() {
    static const std::vector<CampaignRow> rows = {
        {1, 41718.6558, 41725.3892, 41728.6558, 4.0847, 20510, 9.62},
        {2, 19084.3059, 19088.3476, 19097.2054, 3.1663, 17235, 8.10},
        {3, 20744.3639, 20746.1280, 20749.8314, 1.4565, 44721, 20.13},
    };
    return rows;
}

const MeanTable& mean_table(int dim) {
    for (const auto& t : mean_tables())
        if (t.dim == dim) return t;
    throw std::invalid_argument("no published mean table for dimension " + std::to_string(dim));
}

const DesignColumn& design_column(int case_id, const std::string& algorithm) {
    for (const auto& c : design_columns())
        if (c.case_id == case_id && c.algorithm == algorithm) return c;
    throw std::invalid_argument("no published design column " + algorithm + " for case " + std::to_string(case_id));
}

}  // namespace shms::reference
