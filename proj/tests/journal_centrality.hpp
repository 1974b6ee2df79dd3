#pragma once

#include <array>
#include <cstddef>

// Transcribed centrality columns for the 61-journal network, in label order.
namespace interlock::testdata {

struct JournalRow {
  int degree;
  double normalized_degree;
  std::size_t degree_rank;
  double closeness;
  std::size_t closeness_rank;
  double betweenness;
  std::size_t betweenness_rank;
};

inline constexpr std::array<JournalRow, 61> kJournalCentrality{{
    {10, 0.167, 10, 0.406, 6, 0.027, 19},  // 1
    {9, 0.150, 13, 0.364, 13, 0.014, 25},  // 2
    {6, 0.100, 23, 0.351, 14, 0.008, 28},  // 3
    {3, 0.050, 32, 0.307, 29, 0.002, 33},  // 4
    {2, 0.033, 38, 0.281, 37, 0.028, 17},  // 5
    {8, 0.133, 17, 0.324, 21, 0.010, 26},  // 6
    {3, 0.050, 32, 0.332, 18, 0.003, 32},  // 7
    {3, 0.050, 32, 0.292, 33, 0.029, 14},  // 8
    {8, 0.133, 17, 0.327, 20, 0.020, 20},  // 9
    {10, 0.167, 10, 0.402, 7, 0.038, 11},  // 10
    {13, 0.217, 5, 0.435, 2, 0.055, 8},  // 11
    {14, 0.233, 3, 0.394, 10, 0.166, 1},  // 12
    {7, 0.117, 21, 0.290, 35, 0.001, 35},  // 13
    {7, 0.117, 21, 0.290, 35, 0.001, 35},  // 14
    {0, 0.000, 52, 0.000, 52, 0.000, 38},  // 15
    {6, 0.100, 23, 0.317, 23, 0.000, 38},  // 16
    {0, 0.000, 52, 0.000, 52, 0.000, 38},  // 17
    {10, 0.167, 10, 0.410, 5, 0.099, 3},  // 18
    {5, 0.083, 28, 0.301, 30, 0.033, 12},  // 19
    {3, 0.050, 32, 0.281, 37, 0.016, 21},  // 20
    {16, 0.267, 1, 0.414, 3, 0.104, 2},  // 21
    {6, 0.100, 23, 0.312, 26, 0.014, 24},  // 22
    {2, 0.033, 38, 0.221, 48, 0.000, 38},  // 23
    {12, 0.200, 8, 0.394, 10, 0.033, 13},  // 24
    {9, 0.150, 13, 0.351, 14, 0.028, 16},  // 25
    {13, 0.217, 5, 0.402, 7, 0.041, 9},  // 26
    {6, 0.100, 23, 0.348, 16, 0.016, 22},  // 27
    {9, 0.150, 13, 0.279, 40, 0.015, 23},  // 28
    {0, 0.000, 52, 0.000, 52, 0.000, 38},  // 29
    {1, 0.017, 45, 0.218, 50, 0.000, 38},  // 30
    {14, 0.233, 3, 0.449, 1, 0.094, 4},  // 31
    {9, 0.150, 13, 0.294, 31, 0.005, 29},  // 32
    {0, 0.000, 52, 0.000, 52, 0.000, 38},  // 33
    {2, 0.033, 38, 0.314, 25, 0.000, 38},  // 34
    {0, 0.000, 52, 0.000, 52, 0.000, 38},  // 35
    {0, 0.000, 52, 0.000, 52, 0.000, 38},  // 36
    {0, 0.000, 52, 0.000, 52, 0.000, 38},  // 37
    {13, 0.217, 5, 0.402, 7, 0.079, 5},  // 38
    {5, 0.083, 28, 0.294, 31, 0.038, 10},  // 39
    {8, 0.133, 17, 0.329, 19, 0.009, 27},  // 40
    {0, 0.000, 52, 0.000, 52, 0.000, 38},  // 41
    {5, 0.083, 28, 0.345, 17, 0.028, 15},  // 42
    {2, 0.033, 38, 0.270, 43, 0.004, 31},  // 43
    {0, 0.000, 52, 0.000, 52, 0.000, 38},  // 44
    {5, 0.083, 28, 0.310, 28, 0.028, 17},  // 45
    {8, 0.133, 17, 0.292, 33, 0.002, 34},  // 46
    {1, 0.017, 45, 0.211, 51, 0.000, 38},  // 47
    {16, 0.267, 1, 0.414, 3, 0.078, 6},  // 48
    {3, 0.050, 32, 0.324, 21, 0.004, 30},  // 49
    {3, 0.050, 32, 0.312, 26, 0.000, 37},  // 50
    {6, 0.100, 23, 0.317, 23, 0.000, 38},  // 51
    {1, 0.017, 45, 0.222, 47, 0.000, 38},  // 52
    {1, 0.017, 45, 0.265, 45, 0.000, 38},  // 53
    {0, 0.000, 52, 0.000, 52, 0.000, 38},  // 54
    {12, 0.200, 8, 0.384, 12, 0.058, 7},  // 55
    {1, 0.017, 45, 0.219, 49, 0.000, 38},  // 56
    {2, 0.033, 38, 0.277, 41, 0.000, 38},  // 57
    {2, 0.033, 38, 0.281, 37, 0.000, 38},  // 58
    {1, 0.017, 45, 0.270, 43, 0.000, 38},  // 59
    {2, 0.033, 38, 0.277, 41, 0.000, 38},  // 60
    {1, 0.017, 45, 0.227, 46, 0.000, 38},  // 61
}};

}  // namespace interlock::testdata
