#include <iostream>
#include <string>

#include "leibniz/io.hpp"
#include "leibniz/zoo.hpp"

// Regenerates the bundled corpus from the fixture definitions. Run from the
// repository root: make_corpus [dir].

int main(int argc, char** argv) {
    using namespace leibniz;
    std::string dir = argc > 1 ? argv[1] : "corpus";
    for (const auto& [name, alg] : zoo::all_algebras()) {
        AlgebraFile f;
        f.algebra = alg;
        f.metadata["name"] = name;
        write_algebra_file(f, dir + "/" + name + ".json");
        std::cout << dir << "/" << name << ".json\n";
    }
    for (const auto& [name, bi] : zoo::all_bimodules()) {
        AlgebraFile f;
        f.algebra = bi.algebra;
        f.carrier = bi;
        f.metadata["name"] = name + "_bimodule";
        write_algebra_file(f, dir + "/" + name + "_bimodule.json");
        std::cout << dir << "/" << name << "_bimodule.json\n";
    }
    return 0;
}
