#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "hecke_stab/serialize.hpp"
#include "printers.hpp"

using namespace hecke_stab;

TEST(Serialize, ScalarText) {
  const Scalar q = Scalar::q();
  EXPECT_EQ((q - Scalar(1)).to_string(), "q-1");
  for (const Scalar& x : {Scalar(0), Scalar(mpq_class(-3, 7)), q.pow(5), (q + Scalar(2)) / (q * q - Scalar(3)), q.pow(-2)})
    EXPECT_EQ(Scalar::parse(x.serialize()), x);
  EXPECT_THROW(Scalar::parse("[1*q^0]"), Error);
}

TEST(Serialize, MatrixRoundTrip) {
  const Scalar q = Scalar::q();
  const auto m = ExactMatrix::from_rows({{q, Scalar(0)}, {q.inverse(), Scalar(mpq_class(1, 2))}, {Scalar(0), Scalar(0)}});
  EXPECT_EQ(matrix_from_json(matrix_to_json(m)), m);
  EXPECT_EQ(matrix_from_json(matrix_to_json(ExactMatrix(0, 3))).cols(), 3u);
}

TEST(Serialize, SequenceRoundTripIsBitExact) {
  for (const auto& v : {build_Mm(2, 4), build_M_specht(Partition({2, 1}), 5), zero_sequence(3)}) {
    const std::string text = dump(sequence_to_json(v));
    const auto back = sequence_from_json(Json::parse(text));
    EXPECT_EQ(back.label, v.label);
    EXPECT_EQ(back.dims(), v.dims());
    for (int n = 0; n < v.n_max; ++n) EXPECT_EQ(back.connector(n), v.connector(n));
    EXPECT_EQ(dump(sequence_to_json(back)), text);
  }
}

TEST(Serialize, FileRoundTripAndRejection) {
  const std::string path = "serialize_roundtrip.json";
  const auto v = build_Mm(1, 4);
  write_sequence(v, path);
  EXPECT_EQ(dump(sequence_to_json(read_sequence(path))), dump(sequence_to_json(v)));
  // A corrupted connector no longer intertwines and is rejected.
  Json j = sequence_to_json(v);
  j["connectors"][2]["entries"][0][2] = "[2*q^0]/[1*q^0]";
  EXPECT_THROW(sequence_from_json(j), Error);
  Json bad = sequence_to_json(v);
  bad["schema"] = "other/0";
  EXPECT_THROW(sequence_from_json(bad), Error);
  EXPECT_THROW(read_sequence("no_such_file.json"), Error);
  std::remove(path.c_str());
}

TEST(Serialize, TableCsv) {
  const auto t = multiplicity_table(build_M_specht(Partition({1}), 3));
  const std::string csv = table_to_csv(t);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "lambda,n=0,n=1,n=2,n=3");
  EXPECT_NE(csv.find("\"()\",0,1,1,1"), std::string::npos);
  EXPECT_NE(csv.find("\"(1)\",0,0,1,1"), std::string::npos);
}
