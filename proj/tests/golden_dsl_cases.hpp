#pragma once

// Generated by gen_dsl_cases.py; do not edit by hand.
// Reference values computed symbolically at 30 digits.

struct GoldenDslCase {
  const char* expr;
  double x, y, z, xi;
  double value;
  double deriv[4];
};

inline constexpr GoldenDslCase kGoldenDslCases[] = {
    {"1+2*3", 0.3, 0.1, -0.2, 0.5,
     7.0,
     {0.0, 0.0, 0.0, 0.0}},
    {"2+3*4^2", 0.0, 0.0, 0.0, 0.0,
     50.0,
     {0.0, 0.0, 0.0, 0.0}},
    {"1-2-3", 1.0, 1.0, 1.0, 1.0,
     -4.0,
     {0.0, 0.0, 0.0, 0.0}},
    {"6/3/2", 0.0, 0.0, 0.0, 0.0,
     1.0,
     {0.0, 0.0, 0.0, 0.0}},
    {"12/3*2", 0.0, 0.0, 0.0, 0.0,
     8.0,
     {0.0, 0.0, 0.0, 0.0}},
    {"1.5e2", 0.0, 0.0, 0.0, 0.0,
     150.0,
     {0.0, 0.0, 0.0, 0.0}},
    {"2.5E-1", 0.0, 0.0, 0.0, 0.0,
     0.25,
     {0.0, 0.0, 0.0, 0.0}},
    {"pi", 0.0, 0.0, 0.0, 0.0,
     3.141592653589793,
     {0.0, 0.0, 0.0, 0.0}},
    {"2*pi", 0.0, 0.0, 0.0, 0.0,
     6.283185307179586,
     {0.0, 0.0, 0.0, 0.0}},
    {"eps", 0.0, 0.0, 0.0, 0.0,
     -1.0,
     {0.0, 0.0, 0.0, 0.0}},
    {"kappa/l0", 0.0, 0.0, 0.0, 0.0,
     4.0,
     {0.0, 0.0, 0.0, 0.0}},
    {"lambda/2", 0.0, 0.0, 0.0, 0.0,
     0.5,
     {0.0, 0.0, 0.0, 0.0}},
    {"x", 0.7, -0.3, 0.2, 1.4,
     0.7,
     {1.0, 0.0, 0.0, 0.0}},
    {"xi", 0.7, -0.3, 0.2, 1.4,
     1.4,
     {0.0, 0.0, 0.0, 1.0}},
    {"x+y+z+xi", 0.7, -0.3, 0.2, 1.4,
     2.0,
     {1.0, 1.0, 1.0, 1.0}},
    {"x*y*z*xi", 0.7, -0.3, 0.2, 1.4,
     -0.0588,
     {-0.084, 0.196, -0.294, -0.042}},
    {"x^2", 1.3, 0.0, 0.0, 0.0,
     1.69,
     {2.6, 0.0, 0.0, 0.0}},
    {"x^3", -0.8, 0.0, 0.0, 0.0,
     -0.512,
     {1.92, 0.0, 0.0, 0.0}},
    {"-x^2", 1.3, 0.0, 0.0, 0.0,
     -1.69,
     {-2.6, 0.0, 0.0, 0.0}},
    {"(-x)^2", 1.3, 0.0, 0.0, 0.0,
     1.69,
     {2.6, 0.0, 0.0, 0.0}},
    {"(x+y)^2", 0.4, 0.9, 0.0, 0.0,
     1.69,
     {2.6, 2.6, 0.0, 0.0}},
    {"x^(2+1)", 0.6, 0.0, 0.0, 0.0,
     0.216,
     {1.08, 0.0, 0.0, 0.0}},
    {"x^2^3", 1.1, 0.0, 0.0, 0.0,
     2.14358881,
     {15.5897368, 0.0, 0.0, 0.0}},
    {"2^2^3", 0.0, 0.0, 0.0, 0.0,
     256.0,
     {0.0, 0.0, 0.0, 0.0}},
    {"x^0.5", 2.25, 0.0, 0.0, 0.0,
     1.5,
     {0.3333333333333333, 0.0, 0.0, 0.0}},
    {"x^-2", 1.6, 0.0, 0.0, 0.0,
     0.390625,
     {-0.48828125, 0.0, 0.0, 0.0}},
    {"2-x^2*3", 0.5, 0.0, 0.0, 0.0,
     1.25,
     {-3.0, 0.0, 0.0, 0.0}},
    {"sin(x)", 0.9, 0.0, 0.0, 0.0,
     0.7833269096274834,
     {0.6216099682706645, 0.0, 0.0, 0.0}},
    {"cos(x+y)", 0.4, -1.1, 0.0, 0.0,
     0.7648421872844884,
     {0.644217687237691, 0.644217687237691, 0.0, 0.0}},
    {"exp(-x^2)", 0.8, 0.0, 0.0, 0.0,
     0.5272924240430485,
     {-0.8436678784688777, 0.0, 0.0, 0.0}},
    {"sqrt(x^2+1)", -1.2, 0.0, 0.0, 0.0,
     1.5620499351813308,
     {-0.7682212795973759, 0.0, 0.0, 0.0}},
    {"atan2(y,x)", 0.8, 0.6, 0.0, 0.0,
     0.6435011087932844,
     {-0.6, 0.8, 0.0, 0.0}},
    {"atan2(y,x)", -0.5, 0.7, 0.0, 0.0,
     2.191045812777718,
     {-0.9459459459459459, -0.6756756756756757, 0.0, 0.0}},
    {"bump(x/2)", 0.9, 0.0, 0.0, 0.0,
     0.2853843258747374,
     {-0.20192088779572814, 0.0, 0.0, 0.0}},
    {"bump(z)", 0.0, 0.0, -0.4, 0.0,
     0.30407643128483336,
     {0.0, 0.0, 0.3447578585995843, 0.0}},
    {"sin(x)^2+cos(x)^2", 1.7, 0.0, 0.0, 0.0,
     1.0,
     {0.0, 0.0, 0.0, 0.0}},
    {"sin(cos(x))", 0.6, 0.0, 0.0, 0.0,
     0.7347754747082689,
     {-0.3830028632421537, 0.0, 0.0, 0.0}},
    {"sqrt(sqrt(x^2+y^2)+1)", 1.1, -0.7, 0.0, 0.0,
     1.5178407298002414,
     {0.27791502466900436, -0.17685501569845732, 0.0, 0.0}},
    {"1/(1+x^2)", 0.9, 0.0, 0.0, 0.0,
     0.5524861878453039,
     {-0.5494337779677055, 0.0, 0.0, 0.0}},
    {"x/y", 1.4, 0.8, 0.0, 0.0,
     1.75,
     {1.25, -2.1875, 0.0, 0.0}},
    {"exp(z/4)*sin(2*x)", 0.3, 0.0, 1.2, 0.0,
     0.7621876158437875,
     {2.228173097983971, 0.0, 0.19054690396094687, 0.0}},
    {"sin(x)*cos(y)+exp(z/4)*bump(xi/3)", 0.5, 0.2, -0.6, 1.2,
     0.7315899567992373,
     {0.8600893382050472, -0.0952471509205588, 0.06543025246243052, -0.09891194627729481}},
    {"atan2(sin(x),cos(x))", 0.7, 0.0, 0.0, 0.0,
     0.7,
     {1.0, 0.0, 0.0, 0.0}},
    {"cos(kappa/l0*z)", 0.0, 0.0, 0.55, 0.0,
     -0.5885011172553457,
     {0.0, 0.0, -3.233985615278361, 0.0}},
    {"bump(2*(xi+eps*z)/lambda-1)", 0.0, 0.0, 0.1, 0.55,
     0.3641821916336149,
     {0.0, 0.0, -0.1486306261130966, 0.1486306261130966}},
    {"sqrt((x-1)^2+(y-1)^2)", 1.4, 0.7, 0.0, 0.0,
     0.5,
     {0.8, -0.6, 0.0, 0.0}},
    {"exp(sin(x)+cos(y))", 0.4, 0.9, 0.0, 0.0,
     2.748425797715287,
     {2.5314677971868145, -2.1529158864647666, 0.0, 0.0}},
    {"(x+2*y)*(z-xi)", 0.3, 0.5, 0.8, 0.2,
     0.78,
     {0.6, 1.2, 1.3, -1.3}},
    {"-(-x)", 0.45, 0.0, 0.0, 0.0,
     0.45,
     {1.0, 0.0, 0.0, 0.0}},
    {"sin(pi*x)/(2+cos(y))", 0.35, 1.3, 0.0, 0.0,
     0.39294685092685666,
     {0.6289984368576065, 0.1669800883090858, 0.0, 0.0}},
};

