#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = luroth::cli::run(std::move(args), out, err);
  return {status, out.str(), err.str()};
}

std::string last_line(const std::string& text) {
  std::istringstream is(text);
  std::string line, last;
  while (std::getline(is, line))
    if (!line.empty()) last = line;
  return last;
}

std::vector<std::string> data_lines(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<std::string> out;
  while (std::getline(is, line))
    if (!line.empty() && line[0] != '#') out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("expand emits the digit row") {
  const Result r = invoke({"expand", "--x", "2/3", "--n", "4"});
  CHECK(r.status == 0);
  CHECK(last_line(r.out) == "2,4,2,2");
}

TEST_CASE("dim case outputs") {
  Result r = invoke({"dim", "--alpha", "0", "--beta", "0"});
  CHECK(r.status == 0);
  CHECK(last_line(r.out) == "0,0,one,1.0,0.0");
  r = invoke({"dim", "--alpha", "0.4", "--beta", "0.5"});
  CHECK(last_line(r.out) == "2/5,1/2,zero,0.0,0.0");
}

TEST_CASE("solve-s value within tolerance of 1 at u = 0") {
  const Result r = invoke({"solve-s", "--u", "0", "--tol", "1e-10", "--format", "json"});
  CHECK(r.status == 0);
  const auto doc = nlohmann::json::parse(r.out);
  const double value = doc["rows"][0][0].get<double>();
  const double err = doc["rows"][0][1].get<double>();
  CHECK(std::abs(value - 1.0) <= 1e-10);
  CHECK(err <= 1e-10);
}

TEST_CASE("round trips: reconstruct inverts expand's cylinder anchor") {
  const Result digits = invoke({"expand", "--x", "5/7", "--n", "6"});
  const Result value = invoke({"reconstruct", "--digits", last_line(digits.out)});
  CHECK(value.status == 0);
  // the partial sum is the cylinder's left endpoint, strictly below 5/7
  CHECK(last_line(value.out) != "");
  const Result cyl = invoke({"cylinder", "--digits", last_line(digits.out), "--format", "json"});
  const auto doc = nlohmann::json::parse(cyl.out);
  CHECK(doc["rows"][0][0].get<std::string>() == last_line(value.out));
}

TEST_CASE("runlength CSV columns") {
  const Result r = invoke({"runlength", "--digits", "2,2,3,2,2,2"});
  const auto rows = data_lines(r.out);
  REQUIRE(rows.size() == 7);  // header + 6
  CHECK(rows[0] == "n,ell_n,ratio");
  CHECK(rows[1] == "1,1,1.0");
  CHECK(rows[6] == "6,3,0.5");
}

TEST_CASE("json output parses for tabular commands") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"schedule", "--alpha", "1/5", "--beta", "1/2", "--k-max", "3", "--format", "json"},
           {"gap-check", "--alpha", "1/5", "--beta", "1/2", "--k-max", "3", "--depth", "4",
            "--format", "json"},
           {"lln", "--n", "100", "--trials", "5", "--seed", "3", "--format", "json"}}) {
    const Result r = invoke(args);
    CHECK(r.status == 0);
    const bool parses = [&] {
      try {
        const auto doc = nlohmann::json::parse(r.out);
        return doc.is_object();
      } catch (...) {
        return false;
      }
    }();
    CHECK(parses);
  }
}

TEST_CASE("exit codes") {
  CHECK(invoke({"expand", "--x", "3/2", "--n", "4"}).status == 1);   // outside (0,1]
  CHECK(invoke({"expand", "--x", "abc", "--n", "4"}).status == 1);   // parse failure
  CHECK(invoke({"expand", "--bogus-flag", "1"}).status == 1);        // unknown flag
  CHECK(invoke({"nosuchcommand"}).status == 1);
  CHECK(invoke({"schedule", "--alpha", "1/5", "--beta", "1/2", "--k-max", "40"}).status == 2);
  CHECK(invoke({"--help"}).status == 0);
  // seeded fill demands a seed
  CHECK(invoke({"construct", "--alpha", "1/5", "--beta", "1/2", "--k-max", "3", "--depth",
                "20"})
            .status == 1);
}

TEST_CASE("construct profile table") {
  const Result r = invoke({"construct", "--alpha", "1/5", "--beta", "1/2", "--k-max", "4",
                           "--depth", "160", "--fill", "constant", "--c", "2", "--emit",
                           "profile"});
  CHECK(r.status == 0);
  const auto rows = data_lines(r.out);
  REQUIRE(rows.size() >= 2);
  CHECK(rows[0] == "k,m_over_nk_mk,m_over_nk1_mk,u_k,profile_ok,first_mismatch_n");
  CHECK(rows[1].find("true") != std::string::npos);
}

namespace {

// minimal CSV field splitter with double-quote handling
std::vector<std::string> csv_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

TEST_CASE("csv output round-trips through a parser") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"dim-surface", "--grid", "3", "--tol", "1e-6"},
           {"enumerate", "--alpha", "1/5", "--beta", "1/2", "--k-max", "3", "--depth", "3"},
           {"schedule", "--alpha", "1/5", "--beta", "1/2", "--k-max", "3"}}) {
    const Result r = invoke(args);
    REQUIRE(r.status == 0);
    const auto rows = data_lines(r.out);
    REQUIRE(rows.size() >= 2);
    const std::size_t width = csv_fields(rows[0]).size();
    CHECK(width >= 3);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(csv_fields(rows[i]).size() == width);
  }
}

TEST_CASE("enumerate emits word,left,length,mu,gap rows") {
  const Result r = invoke({"enumerate", "--alpha", "1/5", "--beta", "1/2", "--k-max", "3",
                           "--depth", "2"});
  CHECK(r.status == 0);
  const auto rows = data_lines(r.out);
  CHECK(rows[0] == "word,left,length,mu,gap");
  REQUIRE(rows.size() == 1 + 4);  // 2^2 words at depth 2
  CHECK(rows[1].substr(0, 6) == "\"2,2\",");
}
