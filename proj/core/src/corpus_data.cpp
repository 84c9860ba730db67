#include "eqgon/corpus.hpp"

namespace eqgon {
namespace detail {

// One line per published witness row, fully sign-expanded.
extern const char* const kCorpusText;
const char* const kCorpusText =
    "m=3 p=3 src=1 : 2,0; -1,1; -1,-1\n"
    "m=15 p=5 src=1 : 483724,0; 445129,48887; -379901,77315; -483631,-2449; -65321,-123753\n"
    "m=7 p=7 src=1 : 88,0; 81,13; 81,-13; -38,30; -38,-30; -87,5; -87,-5\n"
    "m=35 p=7 src=1 : 17226,0; 13194,1872; 13194,-1872; -4726,2800; -4726,-2800; -17081,377; -17081,-377\n"
    "m=11 p=11 src=1 : 90,0; 57,21; 57,-21; 35,25; 35,-25; -9,27; -9,-27; -42,24; -42,-24; -86,8; -86,-8\n"
    "m=55 p=11 src=1 : 728,0; 717,17; 717,-17; 552,64; 552,-64; -273,91; -273,-91; -658,42; -658,-42; -702,26; -702,-26\n"
    "m=231 p=11 src=1 : 800,0; 569,37; 569,-37; 415,45; 415,-45; -124,52; -124,-52; -520,40; -520,-40; -740,20; -740,-20\n"
    "m=1155 p=11 src=1 : 22678,0; 22447,95; 22447,-95; 3967,657; 3967,-657; -5273,649; -5273,-649; -15283,493; -15283,-493; -17197,435; -17197,-435\n"
    "m=39 p=13 src=1 : 440,0; 401,29; 401,-29; 310,50; 310,-50; 154,66; 154,-66; -275,55; -275,-55; -392,32; -392,-32; -418,22; -418,-22\n"
    "m=195 p=13 src=1 : 1666,0; 1601,33; 1601,-33; 1406,64; 1406,-64; 119,119; 119,-119; -791,105; -791,-105; -1519,49; -1519,-49; -1649,17; -1649,-17\n"
    "m=91 p=13 src=1 : 5890,0; 5877,41; 5877,-41; 3875,465; 3875,-465; -402,616; -402,-616; -1767,589; -1767,-589; -5043,319; -5043,-319; -5485,225; -5485,-225\n"
    "m=455 p=13 src=1 : 4104,0; 3519,99; 3519,-99; 3064,128; 3064,-128; 646,190; 646,-190; -2214,162; -2214,-162; -3306,114; -3306,-114; -3761,77; -3761,-77\n"
    "m=143 p=13 src=1 : 6384,0; 4902,342; 4902,-342; 3472,448; 3472,-448; -532,532; -532,-532; -2391,495; -2391,-495; -2534,490; -2534,-490; -6109,155; -6109,-155\n"
    "m=715 p=13 src=1 : 571778,0; 492153,10885; 492153,-10885; 424943,14307; 424943,-14307; 353157,16817; 353157,-16817; -472382,12048; -472382,-12048; -526722,8320; -526722,-8320; -557038,4824; -557038,-4824\n"
    "m=3003 p=13 src=1 : 4496798,0; 4468081,9259; 4468081,-9259; 4017631,36859; 4017631,-36859; -1091473,79605; -1091473,-79605; -1638877,76415; -1638877,-76415; -3823202,43200; -3823202,-43200; -4180559,30229; -4180559,-30229\n"
    "m=15015 p=13 src=1 : 456688,0; 446522,782; 446522,-782; 323828,2628; 323828,-2628; 21097,3723; 21097,-3723; -198122,3358; -198122,-3358; -373297,2147; -373297,-2147; -448372,708; -448372,-708\n"
    "m=51 p=17 src=2 : 1430,0; 1243,99; 1243,-99; 971,147; 971,-147; 325,195; 325,-195; 70,200; 70,-200; -406,192; -406,-192; -695,175; -695,-175; -1001,143; -1001,-143; -1222,104; -1222,-104\n"
    "m=255255 p=17 src=2 : 41516416,0; 37725824,34304; 37725824,-34304; 20300416,71680; 20300416,-71680; 16021856,75808; 16021856,-75808; 13864624,77456; 13864624,-77456; 7027156,80988; 7027156,-80988; -34068899,46961; -34068899,-46961; -40195019,20567; -40195019,-20567; -41434166,5170; -41434166,-5170\n"
    "m=19 p=19 src=2 : 770,0; 751,39; 751,-39; 675,85; 675,-85; 561,121; 561,-121; 238,168; 238,-168; -275,165; -275,-165; -427,147; -427,-147; -446,144; -446,-144; -693,77; -693,-77; -769,9; -769,-9\n"
    "m=1616615 p=19 src=2 : 1306809216,0; 1306710264,12648; 1306710264,-12648; 1099481216,555520; 1099481216,-555520; 971630064,687312; 971630064,-687312; 43693054,1027226; 43693054,-1027226; -138916611,1021977; -138916611,-1021977; -694638111,870573; -694638111,-870573; -863551284,771420; -863551284,-771420; -1071771296,588064; -1071771296,-588064; -1306041904,35216; -1306041904,-35216\n"
    "m=23 p=23 src=2 : 1872,0; 1826,86; 1826,-86; 1803,105; 1803,-105; 1044,324; 1044,-324; 676,364; 676,-364; 78,390; 78,-390; -336,384; -336,-384; -819,351; -819,-351; -911,341; -911,-341; -1072,320; -1072,-320; -1509,231; -1509,-231; -1716,156; -1716,-156\n"
    "m=111546435 p=23 src=2 : 46923183273602,0; 46918331222398,63889920; 46918331222398,-63889920; 46179809577838,787694056; 46179809577838,-787694056; 45535252265413,1072579179; 45535252265413,-1072579179; 32540987084087,3200887671; 32540987084087,-3200887671; 1360169729983,4440962273; 1360169729983,-4440962273; -18098964883063,4099034551; -18098964883063,-4099034551; -21535244754542,3947292712; -21535244754542,-3947292712; -33327326200258,3127514608; -33327326200258,-3127514608; -36400586649517,2803613027; -36400586649517,-2803613027; -41444796116242,2083271992; -41444796116242,-2083271992; -45189222912898,1196604960; -45189222912898,-1196604960\n"
    ;

extern const unsigned long long kCorpusChecksum;
const unsigned long long kCorpusChecksum = 0x95d07296898cbd47ULL; // FNV-1a 64 of the text

} // namespace detail
} // namespace eqgon
