#include "skewinfo/json_io.hpp"

#include <charconv>
#include <cmath>

namespace skewinfo {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

double finite_number(const json& j, const char* what) {
  if (!j.is_number()) {
    throw ParseError(std::string("expected a number for ") + what);
  }
  const double v = j.get<double>();
  if (!std::isfinite(v)) {
    throw ParseError(std::string("non-finite value for ") + what);
  }
  return v;
}

ComplexMatrix unwrap(const json& j, const char* key) {
  if (j.is_object() && j.contains(key)) {
    return matrix_from_json(j.at(key));
  }
  if (j.is_object() && j.contains("dim")) {
    return matrix_from_json(j); // bare matrix object
  }
  throw ParseError(std::string("expected {\"") + key + "\": <matrix>} or a bare matrix");
}

ordered_json permutation_json(const Permutation& pi) {
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < pi.size(); ++i) {
    arr.push_back(pi[i]);
  }
  return arr;
}

} // namespace

nlohmann::ordered_json matrix_to_json(const ComplexMatrix& A) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
      row.push_back(ordered_json::array({A(i, j).real(), A(i, j).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return ordered_json{{"dim", A.rows()}, {"entries", std::move(rows)}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) {
    throw ParseError("matrix JSON requires \"dim\" and \"entries\"");
  }
  if (!j.at("dim").is_number_integer()) {
    throw ParseError("\"dim\" must be an integer");
  }
  const long long dim = j.at("dim").get<long long>();
  if (dim < 1) {
    throw ParseError("\"dim\" must be >= 1");
  }
  const json& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(dim)) {
    throw ParseError("\"entries\" must hold dim rows");
  }
  ComplexMatrix A(dim, dim);
  for (long long i = 0; i < dim; ++i) {
    const json& row = entries.at(static_cast<std::size_t>(i));
    if (!row.is_array() || row.size() != static_cast<std::size_t>(dim)) {
      throw ParseError("each row must hold dim [re,im] pairs");
    }
    for (long long k = 0; k < dim; ++k) {
      const json& cell = row.at(static_cast<std::size_t>(k));
      if (!cell.is_array() || cell.size() != 2) {
        throw ParseError("each entry must be a [re,im] pair");
      }
      A(i, k) = {finite_number(cell.at(0), "entry real part"),
                 finite_number(cell.at(1), "entry imaginary part")};
    }
  }
  return A;
}

ComplexMatrix state_matrix_from_json(const nlohmann::json& j) { return unwrap(j, "rho"); }

ComplexMatrix observable_matrix_from_json(const nlohmann::json& j) {
  return unwrap(j, "observable");
}

std::vector<ComplexMatrix> kraus_list_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kraus") || !j.at("kraus").is_array()) {
    throw ParseError("expected {\"kraus\": [<matrix>, ...]}");
  }
  std::vector<ComplexMatrix> out;
  for (const auto& item : j.at("kraus")) {
    out.push_back(matrix_from_json(item));
  }
  if (out.empty()) {
    throw ParseError("\"kraus\" list is empty");
  }
  return out;
}

nlohmann::ordered_json report_to_json(const ObservableBoundReport& rep) {
  ordered_json bounds;
  bounds["lb0"] = rep.lb0 ? ordered_json(*rep.lb0) : ordered_json(nullptr);
  bounds["lb0_two"] = rep.lb0_two ? ordered_json(*rep.lb0_two) : ordered_json(nullptr);
  bounds["lb0bar"] = rep.lb0bar;
  bounds["lb1"] = rep.lb1;
  ordered_json slacks;
  for (const auto& [name, slack] : rep.slacks) {
    slacks[name] = slack;
  }
  return ordered_json{{"n", rep.n},
                      {"sum_skew", rep.sum_skew},
                      {"bounds", std::move(bounds)},
                      {"slacks", std::move(slacks)}};
}

nlohmann::ordered_json report_to_json(const ChannelBoundReport& rep) {
  ordered_json bounds;
  bounds["fu_two"] = rep.fu_two ? ordered_json(rep.fu_two->bound) : ordered_json(nullptr);
  bounds["thm3"] = rep.thm3 ? ordered_json(rep.thm3->bound) : ordered_json(nullptr);
  bounds["thm4"] = rep.thm4.bound;

  ordered_json argmax;
  if (rep.thm3) {
    ordered_json tuple = ordered_json::array();
    for (const Permutation& pi : rep.thm3->pis) {
      tuple.push_back(permutation_json(pi));
    }
    argmax["thm3"] = std::move(tuple);
  } else {
    argmax["thm3"] = nullptr;
  }
  {
    ordered_json tuple = ordered_json::array();
    for (const Permutation& pi : rep.thm4.pis) {
      tuple.push_back(permutation_json(pi));
    }
    argmax["thm4"] = std::move(tuple);
  }
  if (rep.fu_two) {
    argmax["fu_two"] = ordered_json{{"pi", permutation_json(rep.fu_two->pi)},
                                    {"sign", rep.fu_two->sign}};
  } else {
    argmax["fu_two"] = nullptr;
  }

  return ordered_json{{"N", rep.n_channels},
                      {"n_kraus", rep.n_kraus},
                      {"sum_skew", rep.sum_skew},
                      {"bounds", std::move(bounds)},
                      {"argmax", std::move(argmax)},
                      {"search_exhaustive", rep.search_exhaustive}};
}

std::string format_sig12(double v) {
  char buf[40];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  if (ec != std::errc{}) {
    throw DomainError("format_sig12: conversion failed");
  }
  return std::string(buf, ptr);
}

} // namespace skewinfo
