#pragma once

// Generated by reference_values.py; do not edit.

namespace refs {

inline constexpr double kRedshiftAt01 = 0.10016675001984402582;
inline constexpr double kTemperatureAt01 = 0.15888999399537787173;
inline constexpr double kTemperatureAt1 = 0.013542782627579131798;
inline constexpr double kDistanceTo02 = 2.0;
inline constexpr double kSigmaEqualRadiiN1 = 384.11533653659744003;
inline constexpr double kSigmaTimelike = -1.0784402552362357404e-3;
inline constexpr double kWightmanRe = 0.011290384221336782;
inline constexpr double kWightmanIm = -1.3995210091836075994e-5;
inline constexpr double kNearA = 0.25083444523844807869;
inline constexpr double kNearBeta = 0.10016675001984402582;
inline constexpr double kNearAlphaPlus0 = 5.9931302422353234075;
inline constexpr double kNearPlusRe = 0.12462429781216433832;
inline constexpr double kNearPlusIm = -0.014208921811234712638;
inline constexpr double kCosineRe = 0.43844869046879652565;
inline constexpr double kCosineIm = 1.3980393105920401961e-3;
inline constexpr double kSmallAlphaRe = 1.78728169426064692;
inline constexpr double kSmallAlphaIm = -13.050051859026536891;
inline constexpr double kErfcLimit01 = 0.78655926116242166339;
inline constexpr double kErfcLimit1 = 0.13940279264033098825;
inline constexpr double kErfcLimit5 = 1.3625382666231867017e-12;
inline constexpr double kThermalAt01 = 0.7936367258672383552;

}  // namespace refs
