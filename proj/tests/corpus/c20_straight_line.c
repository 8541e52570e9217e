int checksum(int a, int b, int c) {
    int mix = a * 31;
    mix = mix + b * 17;
    mix = mix + c;
    mix = mix ^ (mix >> 4);
    return mix;
}
