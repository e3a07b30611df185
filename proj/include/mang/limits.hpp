#pragma once

namespace mang {

/// Size guards for exhaustive computations.  The defaults keep every run at
/// desk scale; `MANG_MAX_MN` in the environment raises the two m*n caps and
/// `MANG_MAX_QSYM_COLUMNS` the linear-algebra cap.  Raising them is slow,
/// never unsound.
struct Limits {
  int enumerate_mn = 16;
  int interval_mn = 10;
  long qsym_columns = 5000;

  static Limits defaults() { return {}; }
  static Limits from_env();
};

/// Throws SizeGuardExceeded when m*n is above `cap`.
void check_guard(int m, int n, int cap, const char* what);

}  // namespace mang
