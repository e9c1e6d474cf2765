#include "vedkit/stability.hpp"

#include <stdexcept>

#include "vedkit/interpolate.hpp"

namespace vedkit {

VedTable ved_table(int nMin, int nMax, int threads, const VedRowSource& cached,
                   const std::function<void(const ChernMatherDegrees&)>& onComputed) {
  if (nMin < 3 || nMin > nMax) throw std::invalid_argument("ved_table: need 3 <= nMin <= nMax");
  VedTable table;
  table.nMin = nMin;
  table.nMax = nMax;
  VedOptions opts;
  opts.threads = threads;
  for (int n = nMin; n <= nMax; ++n) {
    if (cached) {
      if (std::optional<ChernMatherDegrees> row = cached(n)) {
        table.entries.emplace(n, std::move(*row));
        continue;
      }
    }
    ChernMatherDegrees row = ved(n, opts);
    if (onComputed) onComputed(row);
    table.entries.emplace(n, std::move(row));
  }
  return table;
}

FitReport fit_sequence(const std::map<int, mpz_class>& values, std::pair<int, int> window,
                       int holdoutCount) {
  const auto [wa, wb] = window;
  if (wa > wb || !values.count(wa) || !values.count(wb))
    throw std::invalid_argument("fit window outside table range");
  for (int n = wa; n <= wb; ++n)
    if (!values.count(n)) throw std::invalid_argument("fit window not contiguous in table");
  if (holdoutCount < 0 || !values.count(wb + holdoutCount))
    throw std::invalid_argument("not enough entries above the window for the holdout");

  FitReport report;
  report.fitWindow = window;

  std::vector<Rat> windowVals;
  for (int n = wa; n <= wb; ++n) windowVals.emplace_back(values.at(n));
  report.detectedDegree = forward_diff_order(windowVals);
  if (!report.detectedDegree) return report;  // honest "not stabilized"

  const int d = *report.detectedDegree;
  if (d + 1 > static_cast<int>(windowVals.size())) throw std::invalid_argument("window insufficient");

  // Interpolate through the last d+1 window points (closest to the regime the
  // holdout extends).
  std::vector<std::pair<long, Rat>> pts;
  for (int n = wb - d; n <= wb; ++n) pts.emplace_back(n, Rat(values.at(n)));
  report.coefficients = interpolate(pts);

  bool allMatch = true;
  for (int k = 1; k <= holdoutCount; ++k) {
    const int n = wb + k;
    const Rat predicted = poly_eval(report.coefficients, Rat(static_cast<long>(n)));
    FitReport::Holdout h;
    h.n = n;
    h.predicted = predicted.isInteger() ? predicted.asInteger() : mpz_class(0);
    h.actual = values.at(n);
    h.match = predicted.isInteger() && h.predicted == h.actual;
    allMatch = allMatch && h.match;
    report.holdout.push_back(std::move(h));
  }
  report.stable = allMatch;
  return report;
}

FitReport fit_and_validate(const VedTable& table, std::pair<int, int> window, int holdoutCount) {
  std::map<int, mpz_class> values;
  for (const auto& [n, row] : table.entries) values.emplace(n, row.ved);
  return fit_sequence(values, window, holdoutCount);
}

}  // namespace vedkit
