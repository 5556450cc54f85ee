#include <ramsey_pods/cli.hpp>

#include <iostream>

int main(int argc, char ** argv)
{
    return rpods::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
