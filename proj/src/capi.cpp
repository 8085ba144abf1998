#include "linewalk.h"

#include <cstring>
#include <new>
#include <string>

#include "linewalk/digraph.hpp"
#include "linewalk/errors.hpp"
#include "linewalk/factorization.hpp"
#include "linewalk/line_ops.hpp"
#include "linewalk/reports.hpp"
#include "linewalk/spectral.hpp"
#include "linewalk/verify.hpp"

struct lw_digraph {
  linewalk::Digraph value;
};

namespace {

thread_local std::string g_last_error;

lw_status status_from_code(linewalk::ErrorCode code) {
  using linewalk::ErrorCode;
  switch (code) {
    case ErrorCode::Ok:
      return LW_OK;
    case ErrorCode::ParseError:
      return LW_ERR_PARSE;
    case ErrorCode::VertexOutOfRange:
      return LW_ERR_VERTEX_OUT_OF_RANGE;
    case ErrorCode::NonBinaryMatrix:
      return LW_ERR_NON_BINARY_MATRIX;
    case ErrorCode::NotSquare:
      return LW_ERR_NOT_SQUARE;
    case ErrorCode::NotEulerian:
      return LW_ERR_NOT_EULERIAN;
    case ErrorCode::NotAcyclic:
      return LW_ERR_NOT_ACYCLIC;
    case ErrorCode::NotRegular:
      return LW_ERR_NOT_REGULAR;
    case ErrorCode::NotSpanning:
      return LW_ERR_NOT_SPANNING;
    case ErrorCode::NotSubdigraph:
      return LW_ERR_NOT_SUBDIGRAPH;
    case ErrorCode::NotLineDigraph:
      return LW_ERR_NOT_LINE_DIGRAPH;
    case ErrorCode::NotUnitary:
      return LW_ERR_NOT_UNITARY;
    case ErrorCode::EmptyArcSet:
      return LW_ERR_EMPTY_ARC_SET;
    case ErrorCode::SizeLimitExceeded:
      return LW_ERR_SIZE_LIMIT_EXCEEDED;
    case ErrorCode::LoopsPresent:
      return LW_ERR_LOOPS_PRESENT;
    case ErrorCode::TooLarge:
      return LW_ERR_TOO_LARGE;
    case ErrorCode::InvalidPartition:
      return LW_ERR_INVALID_PARTITION;
    case ErrorCode::ExponentNegative:
      return LW_ERR_EXPONENT_NEGATIVE;
    case ErrorCode::PenroseViolation:
      return LW_ERR_PENROSE_VIOLATION;
    case ErrorCode::BadDimension:
      return LW_ERR_BAD_DIMENSION;
    case ErrorCode::DimensionMismatch:
      return LW_ERR_DIMENSION_MISMATCH;
    case ErrorCode::BadGenerators:
      return LW_ERR_BAD_GENERATORS;
    case ErrorCode::BadOrder:
      return LW_ERR_BAD_ORDER;
    case ErrorCode::InvalidArgument:
      return LW_ERR_INVALID_ARGUMENT;
  }
  return LW_ERR_INTERNAL;
}

template <typename Fn>
lw_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return LW_OK;
  } catch (const linewalk::Error& e) {
    g_last_error = e.message();
    return status_from_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LW_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (out == nullptr) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

lw_status require(bool ok, const char* message) {
  if (ok) return LW_OK;
  g_last_error = message;
  return LW_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* lw_status_name(lw_status status) {
  switch (status) {
    case LW_OK:
      return "Ok";
    case LW_ERR_PARSE:
      return "ParseError";
    case LW_ERR_VERTEX_OUT_OF_RANGE:
      return "VertexOutOfRange";
    case LW_ERR_NON_BINARY_MATRIX:
      return "NonBinaryMatrix";
    case LW_ERR_NOT_SQUARE:
      return "NotSquare";
    case LW_ERR_NOT_EULERIAN:
      return "NotEulerian";
    case LW_ERR_NOT_ACYCLIC:
      return "NotAcyclic";
    case LW_ERR_NOT_REGULAR:
      return "NotRegular";
    case LW_ERR_NOT_SPANNING:
      return "NotSpanning";
    case LW_ERR_NOT_SUBDIGRAPH:
      return "NotSubdigraph";
    case LW_ERR_NOT_LINE_DIGRAPH:
      return "NotLineDigraph";
    case LW_ERR_NOT_UNITARY:
      return "NotUnitary";
    case LW_ERR_EMPTY_ARC_SET:
      return "EmptyArcSet";
    case LW_ERR_SIZE_LIMIT_EXCEEDED:
      return "SizeLimitExceeded";
    case LW_ERR_LOOPS_PRESENT:
      return "LoopsPresent";
    case LW_ERR_TOO_LARGE:
      return "TooLarge";
    case LW_ERR_INVALID_PARTITION:
      return "InvalidPartition";
    case LW_ERR_EXPONENT_NEGATIVE:
      return "ExponentNegative";
    case LW_ERR_PENROSE_VIOLATION:
      return "PenroseViolation";
    case LW_ERR_BAD_DIMENSION:
      return "BadDimension";
    case LW_ERR_DIMENSION_MISMATCH:
      return "DimensionMismatch";
    case LW_ERR_BAD_GENERATORS:
      return "BadGenerators";
    case LW_ERR_BAD_ORDER:
      return "BadOrder";
    case LW_ERR_INVALID_ARGUMENT:
      return "InvalidArgument";
    default:
      return "Internal";
  }
}

const char* lw_last_error(void) { return g_last_error.c_str(); }

void lw_string_free(char* s) { delete[] s; }

lw_status lw_digraph_parse(const char* text, lw_digraph** out) {
  if (lw_status s = require(text != nullptr && out != nullptr, "null argument"); s != LW_OK)
    return s;
  return guarded([&] { *out = new lw_digraph{linewalk::parse_edge_list(text)}; });
}

lw_status lw_digraph_from_arcs(int32_t n, int32_t arc_count, const int32_t* tails,
                               const int32_t* heads, int allow_loops, lw_digraph** out) {
  if (lw_status s = require(out != nullptr && (arc_count == 0 || (tails != nullptr && heads != nullptr)),
                            "null argument");
      s != LW_OK)
    return s;
  return guarded([&] {
    std::vector<linewalk::Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(arc_count));
    for (int32_t i = 0; i < arc_count; ++i) arcs.emplace_back(tails[i], heads[i]);
    *out = new lw_digraph{linewalk::Digraph(n, std::move(arcs), allow_loops != 0)};
  });
}

void lw_digraph_free(lw_digraph* g) { delete g; }

int32_t lw_digraph_vertex_count(const lw_digraph* g) {
  return g == nullptr ? -1 : g->value.vertex_count();
}

int32_t lw_digraph_arc_count(const lw_digraph* g) {
  return g == nullptr ? -1 : g->value.arc_count();
}

lw_status lw_digraph_format(const lw_digraph* g, char** out) {
  if (lw_status s = require(g != nullptr && out != nullptr, "null argument"); s != LW_OK) return s;
  return guarded([&] { *out = copy_string(linewalk::format_edge_list(g->value)); });
}

lw_status lw_line_digraph(const lw_digraph* g, lw_digraph** out) {
  if (lw_status s = require(g != nullptr && out != nullptr, "null argument"); s != LW_OK) return s;
  return guarded([&] { *out = new lw_digraph{linewalk::line_digraph(g->value).graph}; });
}

lw_status lw_line_digraph_format(const lw_digraph* g, char** out) {
  if (lw_status s = require(g != nullptr && out != nullptr, "null argument"); s != LW_OK) return s;
  return guarded([&] { *out = copy_string(linewalk::format_labeled(linewalk::line_digraph(g->value))); });
}

lw_status lw_iterated_line_digraph(const lw_digraph* g, int32_t k, int64_t max_vertices,
                                   lw_digraph** out) {
  if (lw_status s = require(g != nullptr && out != nullptr && max_vertices > 0, "bad argument");
      s != LW_OK)
    return s;
  return guarded([&] {
    *out = new lw_digraph{
        linewalk::iterated_line_digraph(g->value, k, static_cast<std::size_t>(max_vertices)).graph};
  });
}

lw_status lw_reverse(const lw_digraph* g, lw_digraph** out) {
  if (lw_status s = require(g != nullptr && out != nullptr, "null argument"); s != LW_OK) return s;
  return guarded([&] { *out = new lw_digraph{linewalk::reverse(g->value)}; });
}

lw_status lw_debruijn(int32_t d, int32_t k, int64_t max_vertices, lw_digraph** out) {
  if (lw_status s = require(out != nullptr && max_vertices > 0, "bad argument"); s != LW_OK)
    return s;
  return guarded([&] {
    *out = new lw_digraph{linewalk::debruijn(d, k, static_cast<std::size_t>(max_vertices))};
  });
}

lw_status lw_is_strongly_connected(const lw_digraph* g, int* out) {
  if (lw_status s = require(g != nullptr && out != nullptr, "null argument"); s != LW_OK) return s;
  return guarded([&] { *out = linewalk::is_strongly_connected(g->value) ? 1 : 0; });
}

lw_status lw_is_eulerian(const lw_digraph* g, int* out) {
  if (lw_status s = require(g != nullptr && out != nullptr, "null argument"); s != LW_OK) return s;
  return guarded([&] { *out = linewalk::is_eulerian(g->value) ? 1 : 0; });
}

lw_status lw_regular_degree(const lw_digraph* g, int32_t* out) {
  if (lw_status s = require(g != nullptr && out != nullptr, "null argument"); s != LW_OK) return s;
  return guarded([&] { *out = linewalk::regular_degree(g->value); });
}

lw_status lw_is_line_digraph(const lw_digraph* g, int* out) {
  if (lw_status s = require(g != nullptr && out != nullptr, "null argument"); s != LW_OK) return s;
  return guarded([&] { *out = linewalk::is_line_digraph_matrix(g->value) ? 1 : 0; });
}

lw_status lw_recognize_format(const lw_digraph* g, int32_t max_pattern_n, int json, char** out,
                              int* is_line) {
  if (lw_status s = require(g != nullptr && out != nullptr, "null argument"); s != LW_OK) return s;
  return guarded([&] {
    bool verdict = false;
    *out = copy_string(linewalk::recognize_output(g->value, max_pattern_n, json != 0, &verdict));
    if (is_line != nullptr) *is_line = verdict ? 1 : 0;
  });
}

lw_status lw_factorization_format(const lw_digraph* g, char** out) {
  if (lw_status s = require(g != nullptr && out != nullptr, "null argument"); s != LW_OK) return s;
  return guarded([&] {
    *out = copy_string(linewalk::format_factorization(linewalk::one_factorization(g->value)));
  });
}

lw_status lw_char_poly(const lw_digraph* g, char** out) {
  if (lw_status s = require(g != nullptr && out != nullptr, "null argument"); s != LW_OK) return s;
  return guarded([&] { *out = copy_string(linewalk::spectrum_output(g->value)); });
}

lw_status lw_debruijn_charpoly(int32_t d, int32_t k, char** out, int* ok) {
  if (lw_status s = require(out != nullptr, "null argument"); s != LW_OK) return s;
  return guarded([&] {
    bool pass = false;
    *out = copy_string(linewalk::debruijn_charpoly_line(d, k, &pass));
    if (ok != nullptr) *ok = pass ? 1 : 0;
  });
}

lw_status lw_permanent(const lw_digraph* g, char** out) {
  if (lw_status s = require(g != nullptr && out != nullptr, "null argument"); s != LW_OK) return s;
  return guarded([&] { *out = copy_string(linewalk::permanent_output(g->value)); });
}

lw_status lw_walk_format(const lw_digraph* g, const char* coin, int32_t steps,
                         int32_t start_vertex, double tol, int json, char** out) {
  if (lw_status s = require(g != nullptr && out != nullptr && coin != nullptr && steps >= 0,
                            "bad argument");
      s != LW_OK)
    return s;
  return guarded([&] {
    *out = copy_string(
        linewalk::walk_output(g->value, coin, steps, start_vertex, tol, json != 0));
  });
}

lw_status lw_verify_format(const lw_digraph* g, const char* coin, double tol,
                           int32_t max_pattern_n, int json, char** out, int* all_passed) {
  if (lw_status s = require(g != nullptr && out != nullptr, "null argument"); s != LW_OK) return s;
  return guarded([&] {
    linewalk::VerifyOptions options;
    if (coin != nullptr) options.coin = coin;
    options.tol = tol;
    options.max_recognition_n = max_pattern_n;
    linewalk::Report report = linewalk::verify_digraph(g->value, options);
    *out = copy_string(json != 0 ? linewalk::report_to_json(report)
                                 : linewalk::report_to_text(report));
    if (all_passed != nullptr) *all_passed = report.all_passed() ? 1 : 0;
  });
}

lw_status lw_verify_random_format(int32_t count, uint64_t seed, int json, char** out,
                                  int* all_passed) {
  if (lw_status s = require(out != nullptr && count >= 0, "bad argument"); s != LW_OK) return s;
  return guarded([&] {
    linewalk::Report report = linewalk::verify_random(count, seed);
    *out = copy_string(json != 0 ? linewalk::report_to_json(report)
                                 : linewalk::report_to_text(report));
    if (all_passed != nullptr) *all_passed = report.all_passed() ? 1 : 0;
  });
}

lw_status lw_cayley_demo_format(int32_t n, int json, char** out, int* all_passed) {
  if (lw_status s = require(out != nullptr, "null argument"); s != LW_OK) return s;
  return guarded([&] {
    bool pass = false;
    *out = copy_string(linewalk::cayley_demo_output(n, json != 0, &pass));
    if (all_passed != nullptr) *all_passed = pass ? 1 : 0;
  });
}

}  // extern "C"
