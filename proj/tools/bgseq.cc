#include <bgseq/cli.hh>

#include <exception>
#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    try {
        return bgseq::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
    }
    catch (const std::exception & e) {
        std::cerr << "internal error: " << e.what() << std::endl;
        return bgseq::cli::exit_code::disagreement;
    }
}
