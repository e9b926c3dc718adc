#include <fstream>
#include <iostream>

#include "liemod/cli.hpp"
#include "liemod/fixture_bundle.hpp"

// make_fixtures <fixtures.json> <invalid.json>
int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: make_fixtures <fixtures.json> <invalid.json>\n";
        return 2;
    }
    try {
        liemod::Json good = liemod::fixture_bundle();
        liemod::revalidate(good);
        std::ofstream(argv[1]) << good.dump(2) << "\n";
        std::ofstream(argv[2]) << liemod::invalid_bundle().dump(2) << "\n";
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}
