// Regenerates the sample JSON inputs under data/.
#include <cstdio>

#include "rmap/fixtures.hpp"
#include "rmap/json_io.hpp"

using namespace rmap;

int main(int argc, char** argv) {
    const std::string dir = argc > 1 ? argv[1] : "data";
    save_json_file(dir + "/deg5.json", to_json(fixtures::deg5_function()));
    save_json_file(dir + "/cubic.json", to_json(fixtures::belyi_cubic_function()));
    save_json_file(dir + "/deg5_tgraph.json", to_json(fixtures::deg5_tgraph()));
    save_json_file(dir + "/torus_chessboard.json", to_json(fixtures::chessboard_torus(2, 2)));
    save_json_file(dir + "/hyperelliptic_g2.json", to_json(fixtures::hyperelliptic_rmap(2)));
    save_json_file(dir + "/l_chessboard.json", to_json(fixtures::l_chessboard()));
    save_json_file(dir + "/empty_range_tgraph.json", to_json(fixtures::empty_range_tgraph()));
    std::printf("fixtures written to %s\n", dir.c_str());
    return 0;
}
