#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cycloschur/cache.hpp"
#include "cycloschur/jantzen.hpp"
#include "cycloschur/schur.hpp"

using namespace cycloschur;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    return dir;
}

std::vector<std::string> lines_of(const std::string& payload) {
    std::vector<std::string> out;
    std::istringstream in(payload);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

std::string join_lines(const std::vector<std::string>& lines) {
    std::string out;
    for (const auto& l : lines) {
        out += l;
        out += '\n';
    }
    return out;
}

/* index of the first line starting with the given prefix */
int line_with_prefix(const std::vector<std::string>& lines,
                     const std::string& prefix) {
    for (std::size_t i = 0; i < lines.size(); ++i)
        if (lines[i].rfind(prefix, 0) == 0) return static_cast<int>(i);
    return -1;
}

} // namespace

TEST_CASE("file cache stores, retrieves and invalidates payloads") {
    const fs::path dir = fresh_dir("cycloschur-test-cache-basic");
    FileCache cache(dir);
    REQUIRE(cache.enabled());

    REQUIRE_FALSE(cache.get("absent").has_value());
    cache.put("k", "hello\nworld\n");
    auto got = cache.get("k");
    REQUIRE(got.has_value());
    CHECK(*got == "hello\nworld\n");

    SECTION("overwriting replaces the payload") {
        cache.put("k", "other");
        CHECK(cache.get("k").value() == "other");
    }

    SECTION("a version bump invalidates existing entries") {
        FileCache newer(dir, "2");
        CHECK_FALSE(newer.get("k").has_value());
        newer.put("k", "fresh");
        CHECK(newer.get("k").value() == "fresh");
        /* and the old version now rejects the rewritten file */
        CHECK_FALSE(cache.get("k").has_value());
    }

    SECTION("a corrupted payload byte fails the checksum and reads as a miss") {
        const fs::path file = dir / "k.cache";
        std::string data;
        {
            std::ifstream in(file, std::ios::binary);
            std::stringstream ss;
            ss << in.rdbuf();
            data = ss.str();
        }
        const std::size_t nl = data.find('\n');
        REQUIRE(nl != std::string::npos);
        data[nl + 1] ^= 1;
        std::ofstream(file, std::ios::binary) << data;
        CHECK_FALSE(cache.get("k").has_value());
    }

    SECTION("a disabled cache never stores or returns anything") {
        FileCache off;
        REQUIRE_FALSE(off.enabled());
        off.put("k", "ignored");
        CHECK_FALSE(off.get("k").has_value());
    }

    fs::remove_all(dir);
}

TEST_CASE("gram payloads roundtrip through serialization") {
    const PLocalSystem ms(2, 1, {0, 2});
    const SchurEngine<PLocalSystem> source(ms, 2, {2, 2});
    const SchurEngine<PLocalSystem> target(ms, 2, {2, 2});

    for (int si = 0; si < static_cast<int>(source.shapes().size()); ++si) {
        const std::string payload = serialize_weylgram(source, si);
        REQUIRE(install_weylgram(target, si, payload));
        const auto& A = source.weyl_gram(si);
        const auto& B = target.weyl_gram(si);
        REQUIRE(A.blocks.size() == B.blocks.size());
        for (const auto& [wi, block] : A.blocks) {
            REQUIRE(B.blocks.count(wi) == 1);
            CHECK(B.blocks.at(wi) == block);
            CHECK(B.tabs.at(wi) == A.tabs.at(wi));
        }
    }
    /* the installed data drives the same filtration output */
    const auto direct = v_decomp_matrix(source);
    const auto cached = v_decomp_matrix(target);
    REQUIRE(direct.size() == cached.size());
    for (std::size_t i = 0; i < direct.size(); ++i)
        for (std::size_t j = 0; j < direct[i].size(); ++j)
            CHECK(direct[i][j] == cached[i][j]);
}

TEST_CASE("priming from an on-disk cache reproduces direct computation") {
    const fs::path dir = fresh_dir("cycloschur-test-cache-prime");
    const PLocalSystem ms(2, 1, {0, 2});
    FileCache cache(dir);

    const SchurEngine<PLocalSystem> cold(ms, 2, {2, 2});
    prime_gram_cache(cold, cache);
    std::size_t files = 0;
    for (const auto& e : fs::directory_iterator(dir)) {
        (void)e;
        ++files;
    }
    CHECK(files == cold.shapes().size());

    const SchurEngine<PLocalSystem> warm(ms, 2, {2, 2});
    prime_gram_cache(warm, cache);
    const auto a = v_decomp_matrix(cold);
    const auto b = v_decomp_matrix(warm);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            CHECK(a[i][j] == b[i][j]);

    SECTION("a failed checksum is repaired by recomputation") {
        const std::string key =
            weylgram_key(ms, 2, {2, 2}, cold.shapes()[0]);
        const fs::path file = dir / (key + ".cache");
        REQUIRE(fs::exists(file));
        std::ofstream(file, std::ios::binary) << "cycloschur-cache 1 0000000000000000\njunk\n";
        REQUIRE_FALSE(cache.get(key).has_value());
        const SchurEngine<PLocalSystem> again(ms, 2, {2, 2});
        prime_gram_cache(again, cache); /* recomputes and rewrites */
        auto restored = cache.get(key);
        REQUIRE(restored.has_value());
        CHECK(*restored == serialize_weylgram(cold, 0));
    }

    fs::remove_all(dir);
}

TEST_CASE("malformed payloads read as misses, inconsistent ones are rejected") {
    const PLocalSystem ms(2, 1, {0});
    const SchurEngine<PLocalSystem> E(ms, 3, {3});
    /* shape (2,1) has a 2x2 block at weight (1,1,1) */
    int si = -1;
    for (int i = 0; i < static_cast<int>(E.shapes().size()); ++i)
        if (E.shapes()[i].text() == "2,1") si = i;
    REQUIRE(si >= 0);
    const std::string good = serialize_weylgram(E, si);

    SECTION("unparseable text is a miss, not an error") {
        const SchurEngine<PLocalSystem> F(ms, 3, {3});
        CHECK_FALSE(install_weylgram(F, si, "garbage"));
        CHECK_FALSE(install_weylgram(F, si, "shape 3\nweight 3 1\n1\n"));
        CHECK_FALSE(install_weylgram(F, si, "shape 2,1\nweight nope 1\n1\n"));
        CHECK_FALSE(install_weylgram(F, si, "shape 2,1\nweight 2,1 1\n"));
        /* a zero denominator must not reach gmp normalization */
        auto lines = lines_of(good);
        const int head = line_with_prefix(lines, "weight 1,1,1 2");
        REQUIRE(head >= 0);
        lines[head + 1] = "3/0 " + lines[head + 1].substr(lines[head + 1].find(' ') + 1);
        CHECK_FALSE(install_weylgram(F, si, join_lines(lines)));
        /* the engine still computes correctly afterwards */
        CHECK(F.weyl_gram(si).blocks.size() == E.weyl_gram(si).blocks.size());
    }

    SECTION("a wrong block size is rejected") {
        auto lines = lines_of(good);
        const int head = line_with_prefix(lines, "weight 1,1,1 2");
        REQUIRE(head >= 0);
        lines[head] = "weight 1,1,1 3";
        const SchurEngine<PLocalSystem> F(ms, 3, {3});
        CHECK_THROWS_AS(install_weylgram(F, si, join_lines(lines)),
                        MathInconsistency);
    }

    SECTION("an entry outside the local ring is rejected") {
        auto lines = lines_of(good);
        const int head = line_with_prefix(lines, "weight 1,1,1 2");
        REQUIRE(head >= 0);
        lines[head + 1] = "1/2 " + lines[head + 1].substr(lines[head + 1].find(' ') + 1);
        const SchurEngine<PLocalSystem> F(ms, 3, {3});
        CHECK_THROWS_AS(install_weylgram(F, si, join_lines(lines)),
                        MathInconsistency);
    }

    SECTION("an asymmetric block is rejected") {
        auto lines = lines_of(good);
        const int head = line_with_prefix(lines, "weight 1,1,1 2");
        REQUIRE(head >= 0);
        /* change the (1,0) entry only: appending a digit to the first token
         * always yields a valid, different value (10x+1 != x) */
        const std::string row = lines[head + 2];
        std::size_t sp = row.find(' ');
        if (sp == std::string::npos) sp = row.size();
        lines[head + 2] = row.substr(0, sp) + "1" + row.substr(sp);
        const SchurEngine<PLocalSystem> F(ms, 3, {3});
        CHECK_THROWS_AS(install_weylgram(F, si, join_lines(lines)),
                        MathInconsistency);
    }

    SECTION("a leading block other than (1) is rejected") {
        auto lines = lines_of(good);
        const int head = line_with_prefix(lines, "weight 2,1 1");
        REQUIRE(head >= 0);
        lines[head + 1] = "3";
        const SchurEngine<PLocalSystem> F(ms, 3, {3});
        CHECK_THROWS_AS(install_weylgram(F, si, join_lines(lines)),
                        MathInconsistency);
    }

    SECTION("missing blocks are rejected") {
        auto lines = lines_of(good);
        const int head = line_with_prefix(lines, "weight 1,1,1 2");
        REQUIRE(head >= 0);
        lines.erase(lines.begin() + head, lines.begin() + head + 3);
        const SchurEngine<PLocalSystem> F(ms, 3, {3});
        CHECK_THROWS_AS(install_weylgram(F, si, join_lines(lines)),
                        MathInconsistency);
    }

    SECTION("a checksum-valid but inconsistent cache file stops the run") {
        const fs::path dir = fresh_dir("cycloschur-test-cache-bad");
        FileCache cache(dir);
        auto lines = lines_of(serialize_weylgram(E, 0));
        const int head = line_with_prefix(lines, "weight " + E.shapes()[0].text() + " 1");
        REQUIRE(head >= 0);
        lines[head + 1] = "3";
        cache.put(weylgram_key(ms, 3, {3}, E.shapes()[0]), join_lines(lines));
        const SchurEngine<PLocalSystem> F(ms, 3, {3});
        CHECK_THROWS_AS(prime_gram_cache(F, cache), MathInconsistency);
        fs::remove_all(dir);
    }
}
