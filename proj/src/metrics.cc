// Copyright 2026 The entity-faithful Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "faithful/metrics.h"

#include <cmath>
#include <stdexcept>

namespace faithful {

namespace {

std::uint64_t CountMatched(const std::vector<EntitySpan> &entities, const AnnotatedText &haystack,
                           const Matcher &matcher) {
  std::uint64_t n = 0;
  for (const EntitySpan &e : entities) {
    if (matcher.Find(e, haystack).matched) ++n;
  }
  return n;
}

}  // namespace

EntityCounts CountMatches(const Example &example, const Matcher &matcher) {
  EntityCounts c;
  const auto &gold = example.summary.entities();
  c.n_t = gold.size();
  c.n_t_in_s = CountMatched(gold, example.source, matcher);
  if (!example.hypothesis) {
    c.hypothesis_present = false;
    return c;
  }
  const auto &hyp = example.hypothesis->entities();
  c.n_h = hyp.size();
  c.n_h_in_s = CountMatched(hyp, example.source, matcher);
  c.n_h_in_t = CountMatched(hyp, example.summary, matcher);
  return c;
}

EntityCounts CountMatches(const Example &example) { return CountMatches(example, Matcher()); }

EntityCounts CountGoldMatches(const Example &example, const Matcher &matcher) {
  EntityCounts c;
  c.hypothesis_present = example.hypothesis.has_value();
  c.n_t = example.summary.entities().size();
  c.n_t_in_s = CountMatched(example.summary.entities(), example.source, matcher);
  return c;
}

MetricValue Ratio(std::uint64_t numerator, std::uint64_t denominator) {
  if (denominator == 0) return std::nullopt;
  return static_cast<double>(numerator) / static_cast<double>(denominator);
}

MetricValue F1(MetricValue precision, MetricValue recall) {
  if (!precision || !recall) return std::nullopt;
  const double sum = *precision + *recall;
  if (sum == 0.0) return std::nullopt;
  return 2.0 * *precision * *recall / sum;
}

ExampleMetrics ComputeMetrics(const EntityCounts &c) {
  ExampleMetrics m;
  m.prec_s = Ratio(c.n_h_in_s, c.n_h);
  m.prec_t = Ratio(c.n_h_in_t, c.n_h);
  m.recall_t = Ratio(c.n_h_in_t, c.n_t);
  m.f1_t = F1(m.prec_t, m.recall_t);
  return m;
}

void ExactSum::Add(double value) {
  if (!(value >= 0.0 && value <= 1.0)) throw std::invalid_argument("ExactSum accepts values in [0, 1]");
  if (value == 0.0) return;
  int exp = 0;
  const double frac = std::frexp(value, &exp);  // value = frac * 2^exp, frac in [0.5, 1)
  auto mantissa = static_cast<std::uint64_t>(std::ldexp(frac, 53));
  // value = mantissa * 2^(exp - 53); in units of 2^-192 that is a left shift
  // by exp + 139. Anything below 2^-192 is dropped (values under 2^-139).
  int shift = exp + 139;
  if (shift < 0) {
    if (shift <= -64) return;
    mantissa >>= -shift;
    shift = 0;
  }
  const int limb = shift / 64;
  const int bit = shift % 64;
  std::uint64_t lo = mantissa << bit;
  std::uint64_t hi = bit == 0 ? 0 : mantissa >> (64 - bit);
  auto add_at = [this](int index, std::uint64_t v) {
    for (int i = index; i < 4 && v != 0; ++i) {
      const std::uint64_t before = limbs_[i];
      limbs_[i] += v;
      v = limbs_[i] < before ? 1 : 0;
    }
  };
  add_at(limb, lo);
  if (limb + 1 < 4) add_at(limb + 1, hi);
}

void ExactSum::Merge(const ExactSum &other) {
  std::uint64_t carry = 0;
  for (int i = 0; i < 4; ++i) {
    const std::uint64_t a = limbs_[i];
    const std::uint64_t s = a + other.limbs_[i];
    const std::uint64_t c1 = s < a ? 1 : 0;
    limbs_[i] = s + carry;
    const std::uint64_t c2 = limbs_[i] < s ? 1 : 0;
    carry = c1 | c2;
  }
}

double ExactSum::ToDouble() const {
  long double v = 0.0L;
  for (int i = 0; i < 4; ++i) v += std::ldexp(static_cast<long double>(limbs_[i]), 64 * i - 192);
  return static_cast<double>(v);
}

void CorpusAggregator::AddValue(MacroState *state, const MetricValue &value) {
  if (!value) return;
  state->sum.Add(*value);
  ++state->defined;
}

void CorpusAggregator::Add(const EntityCounts &counts) {
  if (!counts.IsConsistent()) throw std::invalid_argument("inconsistent entity counts");
  totals_ += counts;
  ++examples_;
  if (counts.hypothesis_present) ++with_hypothesis_;
  const ExampleMetrics m = ComputeMetrics(counts);
  AddValue(&prec_s_, m.prec_s);
  AddValue(&prec_t_, m.prec_t);
  AddValue(&recall_t_, m.recall_t);
  AddValue(&f1_t_, m.f1_t);
}

void CorpusAggregator::Merge(const CorpusAggregator &other) {
  totals_ += other.totals_;
  examples_ += other.examples_;
  with_hypothesis_ += other.with_hypothesis_;
  for (auto [mine, theirs] : {std::pair{&prec_s_, &other.prec_s_}, std::pair{&prec_t_, &other.prec_t_},
                              std::pair{&recall_t_, &other.recall_t_}, std::pair{&f1_t_, &other.f1_t_}}) {
    mine->sum.Merge(theirs->sum);
    mine->defined += theirs->defined;
  }
}

MetricReport CorpusAggregator::Finish() const {
  if (examples_ == 0) throw std::invalid_argument("cannot aggregate an empty corpus");
  auto macro = [](const MacroState &s) -> MetricValue {
    if (s.defined == 0) return std::nullopt;
    return s.sum.ToDouble() / static_cast<double>(s.defined);
  };
  MetricReport r;
  r.counts = totals_;
  r.counts.hypothesis_present = with_hypothesis_ > 0;
  r.examples_total = examples_;

  r.prec_s = {macro(prec_s_), Ratio(totals_.n_h_in_s, totals_.n_h)};
  r.prec_t = {macro(prec_t_), Ratio(totals_.n_h_in_t, totals_.n_h)};
  r.recall_t = {macro(recall_t_), Ratio(totals_.n_h_in_t, totals_.n_t)};
  r.f1_t = {macro(f1_t_), F1(r.prec_t.micro, r.recall_t.micro)};

  r.examples_skipped.prec_s = examples_ - prec_s_.defined;
  r.examples_skipped.prec_t = examples_ - prec_t_.defined;
  r.examples_skipped.recall_t = examples_ - recall_t_.defined;
  r.examples_skipped.f1_t = examples_ - f1_t_.defined;
  return r;
}

MetricReport AggregateCorpus(std::span<const EntityCounts> counts) {
  CorpusAggregator agg;
  for (const EntityCounts &c : counts) agg.Add(c);
  return agg.Finish();
}

void GoldStatsAccumulator::Add(const EntityCounts &counts) {
  ++examples_;
  n_t_ += counts.n_t;
  n_t_in_s_ += counts.n_t_in_s;
}

void GoldStatsAccumulator::Merge(const GoldStatsAccumulator &other) {
  examples_ += other.examples_;
  n_t_ += other.n_t_;
  n_t_in_s_ += other.n_t_in_s_;
}

GoldCorpusStats GoldStatsAccumulator::Finish() const {
  if (examples_ == 0) throw std::invalid_argument("gold corpus statistics need at least one example");
  GoldCorpusStats s;
  s.examples = examples_;
  s.n_t = n_t_;
  s.n_t_in_s = n_t_in_s_;
  s.avg_n_t = static_cast<double>(n_t_) / static_cast<double>(examples_);
  s.avg_n_t_in_s = static_cast<double>(n_t_in_s_) / static_cast<double>(examples_);
  s.prec_s = Ratio(n_t_in_s_, n_t_);
  return s;
}

GoldCorpusStats ComputeGoldCorpusStats(std::span<const Example> dataset, const Matcher &matcher) {
  GoldStatsAccumulator acc;
  for (const Example &ex : dataset) acc.Add(CountGoldMatches(ex, matcher));
  return acc.Finish();
}

GoldCorpusStats ComputeGoldCorpusStats(std::span<const Example> dataset) {
  return ComputeGoldCorpusStats(dataset, Matcher());
}

double PercentOneDecimal(double fraction) { return std::nearbyint(fraction * 1000.0) / 10.0; }

double PercentOneDecimal(std::uint64_t numerator, std::uint64_t denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  const unsigned __int128 scaled = static_cast<unsigned __int128>(numerator) * 1000;
  auto tenths = static_cast<std::uint64_t>(scaled / denominator);
  const auto rem = static_cast<std::uint64_t>(scaled % denominator);
  const unsigned __int128 twice = static_cast<unsigned __int128>(rem) * 2;
  if (twice > denominator || (twice == denominator && tenths % 2 == 1)) ++tenths;
  return static_cast<double>(tenths) / 10.0;
}

}  // namespace faithful
