#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "ncpoisson/json_io.hpp"
#include "ncpoisson/ncpoisson.hpp"

namespace {

using namespace ncpoisson;
namespace nj = ncpoisson::json;

TEST(Json, ScalarEncoding) {
  EXPECT_EQ(nj::to_json(Scalar(1.5, -2.0)).dump(), "[1.5,-2.0]");
  EXPECT_EQ(nj::scalar_from_json(nlohmann::json::parse("[3, 4]")), Scalar(3.0, 4.0));
  EXPECT_THROW(nj::scalar_from_json(nlohmann::json::parse("[1]")), std::exception);
}

TEST(Json, PolyEncoding) {
  const Poly p = Poly::monomial({1, 0}, Scalar(2.0, 1.0), 1, 4);
  EXPECT_EQ(nj::to_json(p).dump(), R"([{"coeff":[2.0,1.0],"exps":[1]}])");
}

TEST(Json, PolyMatRoundTrip) {
  Rng rng(1);
  const Model model = Model::bundle(3, 2, 5);
  const PolyMat a = random_section(rng, model, 3);
  const auto j = nj::to_json(a);
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["vars"], 2);
  EXPECT_EQ(distance(nj::polymat_from_json(j, 5), a), 0.0);
}

TEST(Json, TableIsRowMajor) {
  const PolyMat e12 = PolyMat::from_matrix(elementary(2, 1, 2));
  const Derivation d = Derivation::table(2, Derivation::inner(e12).to_table());
  const auto j = nj::table_to_json(d);
  // ad(E12) maps E22 (column 3) to E12 (row 1)
  EXPECT_EQ(j["matrix"][1][3], nlohmann::json::parse("[1.0,0.0]"));
  const Derivation back = nj::table_from_json(j);
  EXPECT_LT(basis_distance(back, d), 1e-15);
}

TEST(Json, ConnectionFieldIdealRoundTrip) {
  Rng rng(2);
  const Model model = Model::bundle(2, 2, 4);
  const Connection c({random_section(rng, model, 1), random_section(rng, model, 1)});
  const Connection c2 = nj::connection_from_json(nj::to_json(c), 4);
  for (int v = 0; v < 2; ++v) EXPECT_EQ(distance(c.forms()[v], c2.forms()[v]), 0.0);
  const VectorField x({random_poly(rng, 2, 4, 2), random_poly(rng, 2, 4, 2)});
  EXPECT_EQ(distance(nj::vector_field_from_json(nj::to_json(x), 4), x), 0.0);
  for (const Ideal& i : {Ideal::points({{0.0, 1.0}, {2.0, 3.0}}), Ideal::slice(1, 0.5), Ideal::unit()}) {
    EXPECT_EQ(nj::to_json(nj::ideal_from_json(nj::to_json(i))), nj::to_json(i));
  }
  EXPECT_EQ(nj::to_json(Ideal::unit())["kind"], "unit");
}

TEST(Json, ClassificationResultFields) {
  const auto j = nj::to_json(classify_matrix_brackets(2));
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(j["space_dim"], 1);
  EXPECT_TRUE(j.contains("generator"));
  EXPECT_TRUE(j.contains("jacobi_residual"));
}

void write_sample(const std::string& name, const nlohmann::json& j) {
  std::filesystem::create_directories(NCPOISSON_SAMPLE_DIR);
  std::ofstream(std::string(NCPOISSON_SAMPLE_DIR) + "/" + name) << j.dump(2);
}

TEST(Json, WriteSamples) {
  Rng rng(3);
  const Model model = Model::bundle(2, 2, 4);
  write_sample("polymat.bundle.json", nj::to_json(random_section(rng, model, 2)));
  write_sample("polymat.matrix.json", nj::to_json(PolyMat::from_matrix(random_matrix(rng, 3))));
  write_sample("table_derivation.json",
               nj::table_to_json(Derivation::table(2, Derivation::inner(PolyMat::from_matrix(random_matrix(rng, 2))).to_table())));
  write_sample("connection.json", nj::to_json(Connection({random_section(rng, model, 1), random_section(rng, model, 1)})));
  write_sample("ideal.points.json", nj::to_json(Ideal::points({{0.0, 1.0}})));
  write_sample("ideal.slice.json", nj::to_json(Ideal::slice(0, 2.0)));
  write_sample("ideal.unit.json", nj::to_json(Ideal::unit()));
}

}  // namespace
