#pragma once

// Published reference values: the appliance life-test data set and the
// tabulated optimal plans used as comparison baselines.

#include <array>

namespace asp::reference {

/// Cycles to failure of 36 appliances on an automated life test, in test order.
inline constexpr std::array<double, 36> kApplianceLifetimes = {
    11,   35,   49,   170,  329,  381,  708,  958,  1062, 1167, 1594, 1925,
    1990, 2223, 2327, 2400, 2451, 2471, 2551, 2565, 2568, 2694, 2702, 2761,
    2831, 3034, 3059, 3112, 3214, 3478, 3504, 4329, 6367, 6976, 7846, 13403};

/// Quality targets used with the appliance data.
struct CaseStudyTargets {
    double theta_A = 3000;
    double theta_U = 600;
    double T = 2000;
    double alpha = 0.1;
    double beta = 0.2;
};
inline constexpr CaseStudyTargets kCaseStudy{};

/// Published integer plan and outcome for one loss function on the appliance data.
struct CaseStudyPlan {
    int gamma;
    int n;
    double t1;
    double t2;
    double estimate;  ///< published Bayesian estimate on the first n units
    double etc;       ///< published expected testing cost
};
inline constexpr CaseStudyPlan kCaseStudySel{9, 31, 2064, 2065, 2577.9286, 2405};
inline constexpr CaseStudyPlan kCaseStudyLinex{11, 27, 2156, 2157, 2883.2339, 2909};
inline constexpr double kCaseStudyLinexC = 0.5;

/// One row of a published optimal-plan table (C = 1, a = 1.25, b = 2.5).
struct PlanRow {
    double theta_A;
    double theta_U;
    double T;
    double alpha;
    double beta;
    int gamma;
    double t1;
    double t2;
    int n;
    double etc;
};

/// Squared-error loss.
inline constexpr std::array<PlanRow, 12> kTableSel = {{
    {200, 100, 100, 0.05, 0.05, 26, 162.3926, 162.3957, 31, 123.4077},
    {200, 100, 100, 0.01, 0.05, 20, 74.7316, 74.7322, 23, 90.7417},
    {200, 100, 100, 0.01, 0.01, 25, 146.3421, 146.3394, 26, 125.6045},
    {500, 200, 50, 0.05, 0.05, 21, 313.5638, 313.5638, 26, 475.5810},
    {500, 200, 50, 0.01, 0.05, 22, 310.5940, 310.5948, 27, 480.9310},
    {500, 200, 50, 0.01, 0.01, 30, 225.7734, 225.7735, 32, 563.9248},
    {500, 200, 100, 0.05, 0.05, 26, 313.3180, 313.3188, 37, 509.9392},
    {500, 200, 100, 0.01, 0.05, 14, 311.1179, 311.1179, 19, 503.4323},
    {500, 200, 100, 0.01, 0.01, 24, 390.4518, 390.4526, 38, 566.6305},
    {3000, 1500, 1000, 0.05, 0.05, 16, 2005.3416, 2005.3425, 62, 475.5810},
    {3000, 1500, 1000, 0.01, 0.05, 10, 2000.6681, 2000.6682, 92, 480.9310},
    {3000, 1500, 1000, 0.01, 0.01, 15, 2022.5679, 2022.568, 72, 2684.0441},
}};

/// Linex loss, c = 0.5.
inline constexpr std::array<PlanRow, 12> kTableLinexPositive = {{
    {200, 100, 100, 0.05, 0.05, 21, 63.1133, 63.1134, 35, 127.2029},
    {200, 100, 100, 0.01, 0.05, 19, 56.3674, 56.3675, 50, 118.7482},
    {200, 100, 100, 0.01, 0.01, 28, 140.9731, 140.9733, 30, 143.1099},
    {500, 200, 50, 0.05, 0.05, 21, 367.4209, 367.421, 34, 557.9282},
    {500, 200, 50, 0.01, 0.05, 26, 361.9554, 361.9555, 32, 556.9578},
    {500, 200, 50, 0.01, 0.01, 28, 371.9294, 371.9295, 36, 595.2252},
    {500, 200, 100, 0.05, 0.05, 22, 367.4918, 367.4918, 39, 521.9267},
    {500, 200, 100, 0.01, 0.05, 27, 354.8226, 354.8229, 37, 513.5307},
    {500, 200, 100, 0.01, 0.01, 25, 364.1113, 364.1115, 36, 524.21},
    {3000, 1500, 1000, 0.05, 0.05, 15, 2473.6173, 2473.6174, 24, 3379.9555},
    {3000, 1500, 1000, 0.01, 0.05, 11, 2437.8132, 2437.8133, 33, 3161.2578},
    {3000, 1500, 1000, 0.01, 0.01, 6, 2428.6943, 2428.6944, 14, 3705.1855},
}};

/// Linex loss, c = -0.5.
inline constexpr std::array<PlanRow, 12> kTableLinexNegative = {{
    {200, 100, 100, 0.05, 0.05, 28, 186.2786, 186.2793, 34, 228.1767},
    {200, 100, 100, 0.01, 0.05, 26, 178.3335, 178.3342, 29, 232.5816},
    {200, 100, 100, 0.01, 0.01, 23, 177.5453, 177.5455, 45, 220.3530},
    {500, 200, 50, 0.05, 0.05, 12, 400.025, 400.0248, 25, 627.7466},
    {500, 200, 50, 0.01, 0.05, 15, 396.9158, 396.9158, 26, 635.9504},
    {500, 200, 50, 0.01, 0.01, 14, 405.41, 405.4198, 26, 636.7619},
    {500, 200, 100, 0.05, 0.05, 18, 423.5114, 423.5116, 43, 600.3209},
    {500, 200, 100, 0.01, 0.05, 22, 405.5332, 405.5335, 38, 620.4932},
    {500, 200, 100, 0.01, 0.01, 24, 411.5643, 411.5644, 37, 623.4914},
    {3000, 1500, 1000, 0.05, 0.05, 19, 3783.5928, 3783.5929, 29, 3449.2903},
    {3000, 1500, 1000, 0.01, 0.05, 11, 2507.4709, 2507.471, 30, 3411.8618},
    {3000, 1500, 1000, 0.01, 0.01, 9, 2557.26, 2557.2699, 27, 3450.2116},
}};

/// Expected testing costs of competing plans: SEL, Linex (c = 0.5) and a
/// Type I censoring plan decided by the MLE.
struct ComparisonRow {
    double theta_A;
    double theta_U;
    double T;
    double alpha;
    double beta;
    double etc_sel;
    double etc_linex;
    double etc_mle_type1;
};
inline constexpr std::array<ComparisonRow, 2> kComparison = {{
    {200, 100, 100, 0.05, 0.25, 123.4077, 151.0479, 156.53},
    {3000, 1500, 1500, 0.05, 0.1, 1423.5748, 2256.9985, 2290.35},
}};

}  // namespace asp::reference
