#include "anyon/model_io.h"

#include <gtest/gtest.h>

#include "anyon/error.h"

using namespace anyon;

namespace {

std::string data_file(const std::string &name) {
    return std::string(ANYON_TEST_DATA_DIR) + "/" + name;
}

ErrorKind kind_of_parse(const std::string &text) {
    try {
        parse_model(text);
    } catch (const AnyonError &e) {
        return e.kind();
    }
    return ErrorKind::invalid_argument;
}

}  // namespace

TEST(model_io, file_matches_builtin_toric) {
    AnyonModel loaded = load_model_file(data_file("toric.json"));
    AnyonModel builtin = toric_code_model();
    EXPECT_EQ(loaded.labels, builtin.labels);
    EXPECT_EQ(loaded.dual, builtin.dual);
    EXPECT_EQ(loaded.fusion, builtin.fusion);
    EXPECT_EQ(loaded.r_data, builtin.r_data);
    EXPECT_EQ(loaded.f_data, builtin.f_data);
    EXPECT_TRUE(validate_model(loaded).accepted());
}

TEST(model_io, round_trip) {
    for (const auto &m : {toric_code_model(), dz3_model(), trivial_model()}) {
        std::string text = model_to_json(m);
        AnyonModel back = parse_model(text);
        EXPECT_EQ(back.labels, m.labels);
        EXPECT_EQ(back.fusion, m.fusion);
        EXPECT_EQ(back.r_data, m.r_data);
        EXPECT_EQ(back.f_data, m.f_data);
        EXPECT_EQ(model_to_json(back), text);
    }
}

TEST(model_io, missing_dual_is_reported_by_validation) {
    AnyonModel m = load_model_file(data_file("broken_dual.json"));
    ValidationReport r = validate_model(m);
    EXPECT_FALSE(r.accepted());
    EXPECT_FALSE(r.find("dual_pairing")->passed);
    EXPECT_NE(r.find("dual_pairing")->detail.find("e"), std::string::npos);
}

TEST(model_io, rejects_unknown_field) {
    try {
        load_model_file(data_file("unknown_field.json"));
        FAIL();
    } catch (const AnyonError &e) {
        EXPECT_EQ(e.kind(), ErrorKind::parse_error);
        EXPECT_NE(std::string(e.what()).find("braid"), std::string::npos);
    }
}

TEST(model_io, rejects_malformed_documents) {
    EXPECT_EQ(kind_of_parse("{"), ErrorKind::parse_error);
    EXPECT_EQ(kind_of_parse(R"({"labels": ["1"], "fusion": [["1","1","x",1]], "r": []})"), ErrorKind::parse_error);
    EXPECT_EQ(kind_of_parse(R"({"labels": ["1"], "fusion": [["1","1","1"]], "r": []})"), ErrorKind::parse_error);
    EXPECT_EQ(kind_of_parse(R"({"labels": ["1"], "fusion": [["1","1","1",-1]], "r": []})"), ErrorKind::parse_error);
    EXPECT_EQ(kind_of_parse(R"({"fusion": [], "r": []})"), ErrorKind::parse_error);
    EXPECT_THROW(load_model_file(data_file("does_not_exist.json")), AnyonError);
}

TEST(model_io, f_defaults_to_one) {
    AnyonModel m = parse_model(R"({"labels": ["1"], "dual": {"1": "1"}, "fusion": [["1","1","1",1]],
                                   "r": [["1","1","1",1,0]]})");
    EXPECT_EQ(m.F(0, 0, 0, 0), Complex(1, 0));
    EXPECT_TRUE(validate_model(m).accepted());
}
