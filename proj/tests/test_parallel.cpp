#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hermeis/restriction.hpp"

using namespace hermeis;
using field::Field;

// The OpenMP kernels fill independent output slots, so results must be
// identical to the serial references for any thread count.

namespace {

struct ThreadGuard {
#ifdef _OPENMP
  int saved = omp_get_max_threads();
  ~ThreadGuard() { omp_set_num_threads(saved); }
  void set(int n) { omp_set_num_threads(n); }
#else
  void set(int) {}
#endif
};

}  // namespace

TEST_CASE("eisenstein tables: kernel vs serial reference") {
  for (Int dv : {-3, -4, -15}) {
    Field f(dv);
    for (unsigned k : {4u, 6u, 10u})
      CHECK(hermitian::eisenstein_table(k, f, 4) ==
            hermitian::eisenstein_table_serial(k, f, 4));
  }
}

TEST_CASE("siegel tables: kernel vs serial reference") {
  for (unsigned k : {4u, 8u, 12u})
    CHECK(siegel::siegel_table(k, 4) == siegel::siegel_table_serial(k, 4));
}

TEST_CASE("convolution: kernel vs serial reference") {
  Field f(-7);
  hermitian::HermitianFourierTable e4 = hermitian::eisenstein_table(4, f, 4);
  hermitian::HermitianFourierTable e6 = hermitian::eisenstein_table(6, f, 4);
  CHECK(hermitian::multiply(e4, e6) == hermitian::multiply_serial(e4, e6));

  siegel::SiegelFourierTable s4 = siegel::siegel_table(4, 4);
  siegel::SiegelFourierTable s6 = siegel::siegel_table(6, 4);
  CHECK(siegel::multiply(s4, s6) == siegel::multiply_serial(s4, s6));
}

TEST_CASE("results do not depend on the thread count") {
  ThreadGuard guard;
  guard.set(1);
  hermitian::HermitianFourierTable one_thread =
      hermitian::eisenstein_table(6, Field(-8), 4);
  restriction::ScanReport scan_one = restriction::nonvanishing_scan(10, 3, 60);

  guard.set(4);
  hermitian::HermitianFourierTable many_threads =
      hermitian::eisenstein_table(6, Field(-8), 4);
  restriction::ScanReport scan_many = restriction::nonvanishing_scan(10, 3, 60);

  CHECK(one_thread == many_threads);
  REQUIRE(scan_one.rows.size() == scan_many.rows.size());
  for (std::size_t i = 0; i < scan_one.rows.size(); ++i) {
    CHECK(scan_one.rows[i].delta == scan_many.rows[i].delta);
    CHECK(scan_one.rows[i].value == scan_many.rows[i].value);
    CHECK(scan_one.rows[i].witness == scan_many.rows[i].witness);
    CHECK(scan_one.rows[i].verdict == scan_many.rows[i].verdict);
  }
}
