#include "selfconf/scenario.hpp"

#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

#include "selfconf/error.hpp"

namespace selfconf {

namespace {

Eigen::VectorXd vector_from(const nlohmann::json& j, std::string_view field) {
  if (!j.is_array())
    throw Error(ErrorCode::ParseError, std::string(field) + " must be an array");
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number())
      throw Error(ErrorCode::ParseError,
                  std::string(field) + " must contain only numbers");
    v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  }
  return v;
}

Eigen::MatrixXd matrix_from(const nlohmann::json& j) {
  if (!j.is_array() || j.empty())
    throw Error(ErrorCode::ParseError, "P must be a nonempty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array())
    throw Error(ErrorCode::ParseError, "P must be an array of rows");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Eigen::VectorXd row = vector_from(j[static_cast<std::size_t>(r)], "P row");
    if (row.size() != cols)
      throw Error(ErrorCode::NotSquare, "P rows have different lengths");
    m.row(r) = row.transpose();
  }
  return m;
}

double parse_double(std::string_view text) {
  std::string s(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size())
    throw Error(ErrorCode::ParseError, "not a number: '" + s + "'");
  return v;
}

SelfConfidenceProfile sized(Eigen::VectorXd z, Index n) {
  if (static_cast<Index>(z.size()) != n)
    throw Error(ErrorCode::DimensionMismatch,
                "profile has " + std::to_string(z.size()) + " entries, expected " +
                    std::to_string(n));
  return SelfConfidenceProfile(std::move(z));
}

}  // namespace

ScenarioFile parse_scenario(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "scenario must be an object");
  if (!doc.contains("P")) throw Error(ErrorCode::ParseError, "scenario lacks \"P\"");
  if (!doc.contains("sigma2"))
    throw Error(ErrorCode::ParseError, "scenario lacks \"sigma2\"");

  InfluenceNetwork net = validate_network(matrix_from(doc.at("P")));
  const Index n = net.size();
  const Eigen::VectorXd s2 = vector_from(doc.at("sigma2"), "sigma2");
  if (static_cast<Index>(s2.size()) != n)
    throw Error(ErrorCode::DimensionMismatch, "sigma2 length differs from n");
  VarianceVector sigma2(s2);

  std::optional<SelfConfidenceProfile> z;
  if (doc.contains("z") && !doc.at("z").is_null())
    z = sized(vector_from(doc.at("z"), "z"), n);

  return {std::move(net), std::move(sigma2), std::move(z),
          doc.value("name", std::string{}), doc.value("description", std::string{})};
}

ScenarioFile load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::ParseError, path.string() + ": cannot open file");
  try {
    return parse_scenario(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

SelfConfidenceProfile random_profile(Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  Eigen::VectorXd z(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < z.size(); ++i) z(i) = uniform(rng);
  return SelfConfidenceProfile(std::move(z));
}

SelfConfidenceProfile parse_profile_spec(std::string_view spec, Index n) {
  auto after = [&](std::string_view prefix) -> std::optional<std::string_view> {
    if (spec.substr(0, prefix.size()) == prefix) return spec.substr(prefix.size());
    return std::nullopt;
  };
  if (auto v = after("const:"))
    return SelfConfidenceProfile::constant(n, parse_double(*v));
  if (auto v = after("random:")) {
    std::uint64_t seed = 0;
    const auto [end, ec] = std::from_chars(v->data(), v->data() + v->size(), seed);
    if (ec != std::errc{} || end != v->data() + v->size() || v->empty())
      throw Error(ErrorCode::ParseError, "random seed must be a nonnegative integer");
    return random_profile(n, seed);
  }
  if (!spec.empty() && spec.front() == '[') {
    try {
      return sized(vector_from(nlohmann::json::parse(spec), "z"), n);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, std::string("profile JSON: ") + e.what());
    }
  }
  std::string_view list = spec;
  if (auto v = after("csv:")) list = *v;
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = std::min(list.find(',', start), list.size());
    values.push_back(parse_double(list.substr(start, comma - start)));
    start = comma + 1;
  }
  return sized(Eigen::Map<Eigen::VectorXd>(values.data(),
                                           static_cast<Eigen::Index>(values.size())),
               n);
}

}  // namespace selfconf
