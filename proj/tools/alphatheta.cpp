#include <iostream>

#include "alphatheta/cli.hpp"

int main(int argc, char** argv) {
    using namespace alphatheta;
    try {
        const auto cfg = cli::parse_args(argc, argv, std::cout);
        if (!cfg) return 0;
        const auto res = cli::run(*cfg);
        std::cout << res.out;
        std::cerr << res.err;
        return res.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
