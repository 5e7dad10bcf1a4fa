#include "csdd/cli.hpp"

int main(int argc, char** argv)
{
    return csdd::cli::run(argc, argv);
}
