#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "picod/construct.hpp"
#include "picod/json_io.hpp"
#include "picod/verify.hpp"

using namespace picod;

TEST_CASE("code documents round-trip untouched") {
    for (const ProblemInstance& inst :
         {ProblemInstance::consecutive(4, 2, 1, 2), ProblemInstance::consecutive(3, 1, 2, 2),
          ProblemInstance::complement(6, 2, 1, 3)}) {
        DecentralizedCode code = synthesize(inst, std::nullopt, 5);
        Json j = to_json(code);
        DecentralizedCode back = code_from_json(j);
        CHECK(back.generator == code.generator);
        CHECK(back.beta == code.beta);
        CHECK(back.schedule.transmitter == code.schedule.transmitter);
        CHECK(back.schedule.mode == code.schedule.mode);
        CHECK(back.instance.sizes == code.instance.sizes);
        CHECK(stable_dump(to_json(back)) == stable_dump(j));
    }
}

TEST_CASE("dump is stable and newline-terminated") {
    DecentralizedCode code =
        synthesize(ProblemInstance::consecutive(4, 2, 1, 2), std::nullopt, 1);
    std::string a = stable_dump(to_json(code));
    std::string b = stable_dump(to_json(code));
    CHECK(a == b);
    CHECK(a.back() == '\n');
    // keys come out sorted, so field ordering cannot drift
    CHECK(a.find("\"beta\"") < a.find("\"field\""));
    CHECK(a.find("\"field\"") < a.find("\"generator\""));
}

TEST_CASE("tampered documents are rejected") {
    DecentralizedCode code =
        synthesize(ProblemInstance::consecutive(4, 2, 1, 2), std::nullopt, 2);
    const Json good = to_json(code);
    CHECK_NOTHROW(code_from_json(good));

    Json bad = good;
    bad["length"]["num"] = bad["length"]["num"].get<std::int64_t>() + 1;
    CHECK_THROWS_AS(code_from_json(bad), std::invalid_argument);

    bad = good;
    bad["instance"]["kind"] = "other";
    CHECK_THROWS_AS(code_from_json(bad), std::invalid_argument);

    bad = good;
    bad["generator"][0][0] = 255; // outside GF(8)
    CHECK_THROWS_AS(code_from_json(bad), std::invalid_argument);

    bad = good;
    bad["schedule"][0]["user"] = 10000;
    CHECK_THROWS_AS(validate(code_from_json(bad)), std::invalid_argument);

    bad = good;
    bad["schedule"][0]["row"] = 99;
    CHECK_THROWS_AS(code_from_json(bad), std::invalid_argument);

    bad = good;
    bad.erase("beta");
    CHECK_THROWS_AS(code_from_json(bad), std::invalid_argument);

    bad = good;
    bad["generator"][0].erase(0);
    CHECK_THROWS_AS(code_from_json(bad), std::invalid_argument);

    bad = good;
    bad["knowledge_mode"] = "telepathic";
    CHECK_THROWS_AS(code_from_json(bad), std::invalid_argument);
}

TEST_CASE("verification reports serialize fully") {
    DecentralizedCode code =
        synthesize(ProblemInstance::consecutive(5, 1, 1, 2), std::nullopt, 0);
    VerificationReport rep = validate(code);
    Json j = to_json(rep);
    CHECK(j.at("valid").get<bool>());
    CHECK(j.at("schedule_ok").get<bool>());
    CHECK(j.at("length").at("num").get<std::int64_t>() == 3);
    CHECK(j.at("length").at("den").get<std::int64_t>() == 1);
    CHECK(j.at("violations").empty());
    CHECK(j.at("per_user").size() == rep.per_user.size());
    CHECK(j.at("per_user")[0].contains("decodable"));
    CHECK(j.at("per_user")[0].contains("desired"));
}

TEST_CASE("file IO round trip") {
    DecentralizedCode code =
        synthesize(ProblemInstance::complement(7, 2, 2, 3), std::nullopt, 3);
    const std::string path = "picod_test_roundtrip.json";
    write_json_file(path, to_json(code));
    Json j = read_json_file(path);
    DecentralizedCode back = code_from_json(j);
    CHECK(back.generator == code.generator);
    std::remove(path.c_str());

    CHECK_THROWS_AS(read_json_file("definitely/not/a/path.json"), std::runtime_error);
    CHECK_THROWS_AS(write_json_file("definitely/not/a/path.json", Json::object()),
                    std::runtime_error);
}
