#pragma once

// Reference matrices shared by the unit suites and the acceptance binary.

#include <string>

#include "riordan_gep/matrix.hpp"
#include "riordan_gep/rational.hpp"

namespace goldens {

using rgep::q;
using rgep::Rational;
using rgep::RMatrix;

inline RMatrix ints(std::initializer_list<std::initializer_list<long>> rows, const Rational& scale = 1) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows.begin()->size()) : 0;
  RMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (long v : row) m(i, j++) = scale * Rational(v);
    ++i;
  }
  return m;
}

inline RMatrix rats(std::initializer_list<std::initializer_list<const char*>> rows, const Rational& scale = 1) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows.begin()->size()) : 0;
  RMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (const char* v : row) m(i, j++) = scale * rgep::parse_rational(v);
    ++i;
  }
  return m;
}

inline RMatrix U(int n) {
  switch (n) {
    case 2: return ints({{1, 1}, {-1, 1}}, q(1, 2));
    case 3: return ints({{1, 1, 1}, {-2, 0, 4}, {1, -1, 1}}, q(1, 6));
    case 4: return ints({{1, 1, 1, 1}, {-3, -1, 3, 11}, {3, -1, -3, 11}, {-1, 1, -1, 1}}, q(1, 24));
  }
  throw std::out_of_range("no U golden for n=" + std::to_string(n));
}

inline RMatrix Uinv(int n) {
  switch (n) {
    case 2: return ints({{1, -1}, {1, 1}});
    case 3: return ints({{2, -1, 2}, {3, 0, -3}, {1, 1, 1}});
    case 4: return ints({{6, -2, 2, -6}, {11, -1, -1, 11}, {6, 2, -2, -6}, {1, 1, 1, 1}});
  }
  throw std::out_of_range("no Uinv golden for n=" + std::to_string(n));
}

inline RMatrix V(int n) {
  switch (n) {
    case 2: return ints({{1, 0}, {1, 1}});
    case 3: return ints({{1, 0, 0}, {2, 1, 0}, {1, 1, 1}});
    case 4: return ints({{1, 0, 0, 0}, {3, 1, 0, 0}, {3, 2, 1, 0}, {1, 1, 1, 1}});
  }
  throw std::out_of_range("no V golden for n=" + std::to_string(n));
}

inline RMatrix Vinv(int n) {
  switch (n) {
    case 2: return ints({{1, 0}, {-1, 1}});
    case 3: return ints({{1, 0, 0}, {-2, 1, 0}, {1, -1, 1}});
    case 4: return ints({{1, 0, 0, 0}, {-3, 1, 0, 0}, {3, -2, 1, 0}, {-1, 1, -1, 1}});
  }
  throw std::out_of_range("no Vinv golden for n=" + std::to_string(n));
}

inline RMatrix UinvVinv4() {
  return ints({{1, -1, 2, -6}, {0, 1, -3, 11}, {0, 0, 1, -6}, {0, 0, 0, 1}}, 24) *
         RMatrix::diagonal({1, q(1, 2), q(1, 6), q(1, 24)});
}

inline RMatrix VU4() {
  return q(1, 24) * (RMatrix::diagonal({1, 2, 6, 24}) * ints({{1, 1, 1, 1}, {0, 1, 3, 7}, {0, 0, 1, 6}, {0, 0, 0, 1}}));
}

/// W_(n,m) for 1 <= n <= 4 and small m.
inline RMatrix W(int n, int m) {
  if (m == 2) {
    switch (n) {
      case 1: return ints({{2}});
      case 2: return ints({{3, 1}, {1, 3}});
      case 3: return ints({{4, 1, 0}, {4, 6, 4}, {0, 1, 4}});
      case 4: return ints({{5, 1, 0, 0}, {10, 10, 5, 1}, {1, 5, 10, 10}, {0, 0, 1, 5}});
    }
  } else if (m == 3) {
    switch (n) {
      case 1: return ints({{3}});
      case 2: return ints({{6, 3}, {3, 6}});
      case 3: return ints({{10, 4, 1}, {16, 19, 16}, {1, 4, 10}});
      case 4: return ints({{15, 5, 1, 0}, {51, 45, 30, 15}, {15, 30, 45, 51}, {0, 1, 5, 15}});
    }
  } else if (m == 4) {
    switch (n) {
      case 1: return ints({{4}});
      case 2: return ints({{10, 6}, {6, 10}});
      case 3: return ints({{20, 10, 4}, {40, 44, 40}, {4, 10, 20}});
    }
  }
  throw std::out_of_range("no W golden for n=" + std::to_string(n) + ", m=" + std::to_string(m));
}

/// A_n, the matrix that sends alpha~_n of a to alpha~_n of the series with parameter 1.
inline RMatrix A(int n) {
  switch (n) {
    case 2: return ints({{2, 1}, {-1, 0}});
    case 3: return rats({{"5", "5/2", "1"}, {"-6", "-2", "0"}, {"2", "1/2", "0"}});
    case 4:
      return rats({{"14", "7", "3", "1"},
                   {"-28", "-35/3", "-10/3", "0"},
                   {"20", "22/3", "5/3", "0"},
                   {"-5", "-5/3", "-1/3", "0"}});
  }
  throw std::out_of_range("no A golden for n=" + std::to_string(n));
}

inline RMatrix Ainv(int n) {
  switch (n) {
    case 2: return ints({{0, -1}, {1, 2}});
    case 3: return rats({{"0", "1/2", "2"}, {"0", "-2", "-6"}, {"1", "5/2", "5"}});
    case 4:
      return rats({{"0", "-1/3", "-5/3", "-5"},
                   {"0", "5/3", "22/3", "20"},
                   {"0", "-10/3", "-35/3", "-28"},
                   {"1", "3", "7", "14"}});
  }
  throw std::out_of_range("no Ainv golden for n=" + std::to_string(n));
}

inline RMatrix Ahalf(int n) {
  switch (n) {
    case 2: return ints({{3, 1}, {-1, 1}}, q(1, 2));
    case 3: return ints({{21, 7, 1}, {-18, 2, 6}, {5, -1, 1}}, q(1, 8));
    case 4: return ints({{30, 10, 2, 0}, {-45, -5, 5, 3}, {27, 1, -1, 3}, {-6, 0, 0, 0}}, q(1, 6));
  }
  throw std::out_of_range("no A^(1/2) golden for n=" + std::to_string(n));
}

inline RMatrix logA(int n) {
  switch (n) {
    case 2: return ints({{1, 1}, {-1, -1}});
    case 3: return ints({{5, 2, -1}, {-6, 0, 6}, {1, -2, -5}}, q(1, 2));
    case 4: return ints({{13, 3, -1, 1}, {-18, 4, 8, -6}, {6, -8, -4, 18}, {-1, 1, -3, -13}}, q(1, 3));
  }
  throw std::out_of_range("no log A golden for n=" + std::to_string(n));
}

inline RMatrix logA3_squared() { return ints({{1, 1, 1}, {-2, -2, -2}, {1, 1, 1}}, 3); }

inline RMatrix logA4_squared() {
  return ints({{9, 5, 1, -3}, {-21, -9, 3, 15}, {15, 3, -9, -21}, {-3, 1, 5, 9}}, q(4, 3));
}

inline RMatrix logA4_cubed() { return ints({{1, 1, 1, 1}, {-3, -3, -3, -3}, {3, 3, 3, 3}, {-1, -1, -1, -1}}, 16); }

}  // namespace goldens
