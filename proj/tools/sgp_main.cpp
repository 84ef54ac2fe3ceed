#include <iostream>
#include <vector>

#include "semicurve/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    semicurve::CommandResult r = semicurve::run(args);
    std::cout << r.text;
    return r.status;
}
