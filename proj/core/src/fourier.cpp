#include "tvcs/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace tvcs {
namespace {

// FFTW plan creation is not thread safe; execution via fftw_execute_dft is.
// Plans are cached per (rank, size, sign) and created with FFTW_UNALIGNED so
// they can run on any buffer.
fftw_plan plan_for(int rank, int n, int sign) {
  static std::map<std::tuple<int, int, int>, fftw_plan> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_tuple(rank, n, sign);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::size_t total = rank == 1 ? n : std::size_t(n) * n;
  std::vector<std::complex<double>> a(total), b(total);
  int dims[2] = {n, n};
  fftw_plan p = fftw_plan_dft(rank, dims,
                              reinterpret_cast<fftw_complex*>(a.data()),
                              reinterpret_cast<fftw_complex*>(b.data()),
                              sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!p) throw std::runtime_error("fftw plan creation failed");
  cache.emplace(key, p);
  return p;
}

void run(int rank, int n, int sign, const Complex* in, Complex* out) {
  std::size_t total = rank == 1 ? n : std::size_t(n) * n;
  std::vector<Complex> tmp(in, in + total);
  fftw_execute_dft(plan_for(rank, n, sign),
                   reinterpret_cast<fftw_complex*>(tmp.data()),
                   reinterpret_cast<fftw_complex*>(out));
}

} // namespace

CVec dft(const CVec& x) {
  const int n = static_cast<int>(x.size());
  if (n < 1) throw std::invalid_argument("dft: empty input");
  CVec out(n);
  run(1, n, FFTW_BACKWARD, x.data(), out.data());
  return out / std::sqrt(double(n));
}

CVec dft_adjoint(const CVec& s) {
  const int n = static_cast<int>(s.size());
  if (n < 1) throw std::invalid_argument("dft_adjoint: empty input");
  CVec out(n);
  run(1, n, FFTW_FORWARD, s.data(), out.data());
  return out / std::sqrt(double(n));
}

// A square 2D transform commutes with transposition, so the column-major
// buffer can be handed to FFTW (which assumes row-major) directly.
CMat dft(const CMat& x) {
  const int n = static_cast<int>(x.rows());
  if (n < 1 || x.cols() != n) throw std::invalid_argument("dft: grid must be square");
  CMat out(n, n);
  run(2, n, FFTW_BACKWARD, x.data(), out.data());
  return out / double(n);
}

CMat dft_adjoint(const CMat& s) {
  const int n = static_cast<int>(s.rows());
  if (n < 1 || s.cols() != n) throw std::invalid_argument("dft_adjoint: grid must be square");
  CMat out(n, n);
  run(2, n, FFTW_FORWARD, s.data(), out.data());
  return out / double(n);
}

} // namespace tvcs
