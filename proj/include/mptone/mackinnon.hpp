#pragma once

#include <array>
#include <limits>
#include <string_view>

namespace mptone::mackinnon {

// MacKinnon response surfaces for the single-series (N = 1) Dickey-Fuller
// tau statistic.
//   p-values:        MacKinnon (1994), "Approximate asymptotic distribution
//                    functions for unit-root and cointegration tests", JBES 12.
//   critical values: MacKinnon (2010), "Critical values for cointegration
//                    tests", Queen's Economics Dept. WP 1227.
// Values as distributed with statsmodels (tsa/adfvalues.py). Mirrored in
// data/tables/mackinnon_n1_v1.csv; a test keeps the two in sync.
inline constexpr std::string_view kTableVersion = "mackinnon-n1-v1";

// Row order: none, constant, constant + trend.
inline constexpr std::array<double, 3> kTauMax = {std::numeric_limits<double>::infinity(), 2.74, 0.7};
inline constexpr std::array<double, 3> kTauMin = {-19.04, -18.83, -16.18};
inline constexpr std::array<double, 3> kTauStar = {-1.04, -1.61, -2.89};

// p = Phi(c0 + c1 t + c2 t^2 [+ c3 t^3]).
inline constexpr std::array<std::array<double, 3>, 3> kSmallP = {{
    {0.6344, 1.2378, 3.2496e-2},
    {2.1659, 1.4412, 3.8269e-2},
    {3.2512, 1.6047, 4.9588e-2},
}};
inline constexpr std::array<std::array<double, 4>, 3> kLargeP = {{
    {0.4797, 9.3557e-1, -0.6999e-1, 3.3066e-2},
    {1.7339, 9.3202e-1, -1.2745e-1, -1.0368e-2},
    {2.5261, 6.1654e-1, -3.7956e-1, -6.0285e-2},
}};

// Critical value = b0 + b1/T + b2/T^2 + b3/T^3, rows 1%, 5%, 10%.
inline constexpr std::array<std::array<std::array<double, 4>, 3>, 3> kCritical = {{
    {{{-2.56574, -2.2358, -3.627, 0.0}, {-1.94100, -0.2686, -3.365, 31.223}, {-1.61682, 0.2656, -2.714, 25.364}}},
    {{{-3.43035, -6.5393, -16.786, -79.433}, {-2.86154, -2.8903, -4.234, -40.040}, {-2.56677, -1.5384, -2.809, 0.0}}},
    {{{-3.95877, -9.0531, -28.428, -134.155}, {-3.41049, -4.3904, -9.036, -45.374}, {-3.12705, -2.5856, -3.925, -22.380}}},
}};

}  // namespace mptone::mackinnon
